#![allow(dead_code)]

use hcc_core::io::catalog::random_graph;
use hcc_core::oracle::brute_hcd;
use hcc_core::{Convention, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` graphs with `lo..=hi` vertices and edge probability cycling
/// through 0.2, 0.4, 0.6, 0.8.
pub fn random_graphs(seed: u64, count: usize, lo: usize, hi: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let n = r.gen_range(lo..=hi);
            random_graph(n, [0.2, 0.4, 0.6, 0.8][i % 4], &mut r)
        })
        .collect()
}

pub fn oracle_min(g: &Graph) -> usize {
    brute_hcd(g, Convention::default()).unwrap().min.unwrap()
}
