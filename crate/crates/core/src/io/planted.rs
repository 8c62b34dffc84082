use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::context::Convention;
use crate::error::{Error, Result};
use crate::graph::{hc_unchecked, Graph, Partition, VertexSet, MAX_VERTICES};

/// Disjoint highly connected clusters plus uniformly chosen noise edges.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantedSpec {
    pub cluster_sizes: Vec<usize>,
    pub noise_edges: usize,
    pub rng_seed: u64,
    /// Within-cluster edge probability; 1.0 gives cliques.
    pub density: f64,
}

impl PlantedSpec {
    pub fn new(cluster_sizes: Vec<usize>, noise_edges: usize, rng_seed: u64) -> Self {
        PlantedSpec {
            cluster_sizes,
            noise_edges,
            rng_seed,
            density: 1.0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PlantedInstance {
    pub graph: Graph,
    pub clusters: Partition,
    pub noise: Vec<(usize, usize)>,
}

const MAX_CLUSTER_ATTEMPTS: usize = 10_000;

/// Generates a planted instance; identical specs give identical graphs.
pub fn generate_planted(spec: &PlantedSpec) -> Result<PlantedInstance> {
    let invalid = |msg: String| Err(Error::InvalidInstance(msg));
    if spec.cluster_sizes.contains(&0) {
        return invalid("cluster sizes must be positive".into());
    }
    if spec.cluster_sizes.contains(&2) {
        return invalid("a 2-vertex cluster is never highly connected".into());
    }
    if !(0.0..=1.0).contains(&spec.density) || spec.density == 0.0 {
        return invalid(format!("density {} outside (0, 1]", spec.density));
    }
    let n: usize = spec.cluster_sizes.iter().sum();
    if n > MAX_VERTICES {
        return invalid(format!("{n} vertices exceeds the limit of {MAX_VERTICES}"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(spec.rng_seed);
    let mut edges = Vec::new();
    let mut clusters = Vec::new();
    let mut start = 0;
    for &size in &spec.cluster_sizes {
        let members: VertexSet = (start..start + size).collect();
        let inner = planted_cluster(size, spec.density, &mut rng)?;
        edges.extend(inner.iter().map(|&(u, v)| (u + start, v + start)));
        clusters.push(members);
        start += size;
    }

    let mut owner = vec![0; n];
    for (i, c) in clusters.iter().enumerate() {
        for v in c.iter() {
            owner[v] = i;
        }
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if owner[u] != owner[v] {
                pairs.push((u, v));
            }
        }
    }
    if spec.noise_edges > pairs.len() {
        return invalid(format!(
            "{} noise edges requested but only {} inter-cluster pairs exist",
            spec.noise_edges,
            pairs.len()
        ));
    }
    let mut noise: Vec<(usize, usize)> = sample(&mut rng, pairs.len(), spec.noise_edges)
        .into_iter()
        .map(|i| pairs[i])
        .collect();
    noise.sort_unstable();
    edges.extend(&noise);

    Ok(PlantedInstance {
        graph: Graph::from_edges(n, edges)?,
        clusters: Partition::new(clusters),
        noise,
    })
}

fn planted_cluster(size: usize, density: f64, rng: &mut ChaCha8Rng) -> Result<Vec<(usize, usize)>> {
    let all: Vec<(usize, usize)> = (0..size)
        .flat_map(|u| (u + 1..size).map(move |v| (u, v)))
        .collect();
    if density >= 1.0 {
        return Ok(all);
    }
    for _ in 0..MAX_CLUSTER_ATTEMPTS {
        let chosen: Vec<_> = all.iter().copied().filter(|_| rng.gen_bool(density)).collect();
        let g = Graph::from_edges(size, chosen.iter().copied())?;
        if hc_unchecked(&g, &g.vertices(), Convention::default()) {
            return Ok(chosen);
        }
    }
    Err(Error::InvalidInstance(format!(
        "no highly connected cluster of size {size} at density {density} after {MAX_CLUSTER_ATTEMPTS} draws"
    )))
}
