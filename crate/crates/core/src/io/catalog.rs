//! Exhaustive graph catalogs and random graphs for equivalence testing.

use std::collections::HashSet;

use itertools::Itertools;
use rand::Rng;

use crate::graph::{connected_components, Graph};

/// Largest order supported by [`all_graphs`].
pub const CATALOG_MAX_N: usize = 8;

/// Edge bitmask under the pair order (0,1), (0,2), .., (n-2,n-1).
fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = (u.min(v), u.max(v));
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

fn encode(g: &Graph, perm: &[usize]) -> u32 {
    let n = g.n();
    g.edges()
        .iter()
        .fold(0, |acc, &(u, v)| acc | 1 << pair_index(n, perm[u], perm[v]))
}

/// Canonical code: smallest encoding over relabellings that respect a
/// degree-based vertex invariant.
fn canonical_code(g: &Graph) -> u32 {
    let n = g.n();
    let invariant = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| invariant(v));
    let classes: Vec<Vec<usize>> = order
        .iter()
        .copied()
        .chunk_by(|&v| invariant(v))
        .into_iter()
        .map(|(_, c)| c.collect())
        .collect();

    let mut best = u32::MAX;
    let class_perms = classes
        .iter()
        .map(|c| c.iter().copied().permutations(c.len()).collect::<Vec<_>>())
        .multi_cartesian_product();
    let mut perm = vec![0; n];
    for choice in class_perms {
        let mut pos = 0;
        for vs in &choice {
            for &v in vs {
                perm[v] = pos;
                pos += 1;
            }
        }
        best = best.min(encode(g, &perm));
    }
    if n == 0 {
        best = 0;
    }
    best
}

/// One representative of every isomorphism class of graphs on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= CATALOG_MAX_N, "catalog limited to {CATALOG_MAX_N} vertices");
    if n == 0 {
        return vec![Graph::new(0).unwrap()];
    }
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for base in all_graphs(n - 1) {
        for mask in 0u32..1 << (n - 1) {
            let extra: Vec<(usize, usize)> = (0..n - 1)
                .filter(|&u| mask >> u & 1 == 1)
                .map(|u| (u, n - 1))
                .collect();
            let g = Graph::from_edges(n, base.edges().iter().copied().chain(extra)).unwrap();
            if seen.insert(canonical_code(&g)) {
                out.push(g);
            }
        }
    }
    out
}

/// Connected members of [`all_graphs`].
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(|g| connected_components(g).len() <= 1)
        .collect()
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
