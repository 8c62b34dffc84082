//! Exhaustive reference solvers. Slow by design of the problem, capped in
//! size, and independent of every optimized code path.

use itertools::Itertools;

use crate::context::Convention;
use crate::error::{Error, Result};
use crate::graph::{hc_unchecked, Cut, Graph, Partition, VertexSet};

pub const PARTITION_ORACLE_MAX_N: usize = 10;
pub const SUBSET_ORACLE_MAX_N: usize = 16;

fn check_n(g: &Graph, limit: usize, what: &'static str) -> Result<()> {
    if g.n() > limit {
        Err(Error::TooManyVertices {
            n: g.n(),
            limit,
            what,
        })
    } else {
        Ok(())
    }
}

/// Calls `visit` with every set partition of `0..n`, as restricted growth
/// strings turned into blocks.
pub fn for_each_set_partition(n: usize, mut visit: impl FnMut(&[VertexSet])) {
    if n == 0 {
        visit(&[]);
        return;
    }
    let mut a = vec![0usize; n];
    let mut blocks = vec![VertexSet::new(); n];
    loop {
        let used = a.iter().max().unwrap() + 1;
        for b in &mut blocks[..used] {
            *b = VertexSet::new();
        }
        for (v, &i) in a.iter().enumerate() {
            blocks[i].insert(v);
        }
        visit(&blocks[..used]);
        // next restricted growth string
        let mut i = n - 1;
        loop {
            if i == 0 {
                return;
            }
            let prefix_max = a[..i].iter().max().copied().unwrap_or(0);
            if a[i] <= prefix_max {
                a[i] += 1;
                a[i + 1..].fill(0);
                break;
            }
            i -= 1;
        }
    }
}

/// Minimum deletions over all partitions into highly connected blocks,
/// with every partition attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteHcd {
    pub min: Option<usize>,
    pub optimal: Vec<Partition>,
}

pub fn brute_hcd(g: &Graph, conv: Convention) -> Result<BruteHcd> {
    check_n(g, PARTITION_ORACLE_MAX_N, "brute_hcd")?;
    let mut best = BruteHcd {
        min: None,
        optimal: Vec::new(),
    };
    for_each_set_partition(g.n(), |blocks| {
        if !blocks.iter().all(|b| hc_unchecked(g, b, conv)) {
            return;
        }
        let inner: usize = blocks.iter().map(|b| g.edges_within(b)).sum();
        let cost = g.m() - inner;
        match best.min {
            Some(m) if cost > m => {}
            Some(m) if cost == m => best.optimal.push(Partition::new(blocks.to_vec())),
            _ => {
                best.min = Some(cost);
                best.optimal = vec![Partition::new(blocks.to_vec())];
            }
        }
    });
    Ok(best)
}

/// Whether some partition into at most `p` highly connected blocks deletes
/// at most `k` edges.
pub fn brute_phcd(g: &Graph, p: usize, k: usize, conv: Convention) -> Result<bool> {
    check_n(g, PARTITION_ORACLE_MAX_N, "brute_phcd")?;
    let mut yes = false;
    for_each_set_partition(g.n(), |blocks| {
        if yes || blocks.len() > p || !blocks.iter().all(|b| hc_unchecked(g, b, conv)) {
            return;
        }
        let inner: usize = blocks.iter().map(|b| g.edges_within(b)).sum();
        yes = g.m() - inner <= k;
    });
    Ok(yes)
}

/// First size-`s` set, in lexicographic order, that is highly connected with
/// boundary plus charges at most `k`.
pub fn brute_isolated(
    g: &Graph,
    charges: &[u32],
    k: usize,
    s: usize,
    conv: Convention,
) -> Result<Option<VertexSet>> {
    check_n(g, SUBSET_ORACLE_MAX_N, "brute_isolated")?;
    if s == 0 {
        return Ok(None);
    }
    Ok((0..g.n()).combinations(s).map(VertexSet::from_iter).find(|c| {
        hc_unchecked(g, c, conv)
            && g.cut_size(c) + c.iter().map(|v| charges[v] as usize).sum::<usize>() <= k
    }))
}

/// First superset `C ⊇ seed` of size `|seed| + a` that is highly connected
/// with `m − |E(G[C])| ≤ k`.
pub fn brute_seeded(
    g: &Graph,
    seed: &VertexSet,
    a: usize,
    k: usize,
    conv: Convention,
) -> Result<Option<VertexSet>> {
    check_n(g, SUBSET_ORACLE_MAX_N, "brute_seeded")?;
    g.check_subset(seed)?;
    let pool = (g.vertices() - *seed).to_vec();
    if a > pool.len() {
        return Ok(None);
    }
    Ok(pool
        .into_iter()
        .combinations(a)
        .map(|ext| ext.into_iter().fold(*seed, |c, v| c.with(v)))
        .find(|c| hc_unchecked(g, c, conv) && g.m() - g.edges_within(c) <= k))
}

/// Every bipartition with vertex 0 on `side1` and at most `k` crossing
/// edges, by scanning all `2^(n-1)` candidates.
pub fn brute_cuts(g: &Graph, k: usize) -> Result<Vec<Cut>> {
    check_n(g, SUBSET_ORACLE_MAX_N, "brute_cuts")?;
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    Ok((0u64..1 << (g.n() - 1))
        .map(|rest| Cut::new(g, VertexSet::from_mask(rest << 1 | 1)))
        .filter(|c| c.crossing <= k)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::fixtures;

    fn conv() -> Convention {
        Convention::default()
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..=7)
            .map(|n| {
                let mut c = 0;
                for_each_set_partition(n, |_| c += 1);
                c
            })
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203, 877]);
    }

    #[test]
    fn hcd_oracle_examples() {
        let k4 = brute_hcd(&Graph::complete(4), conv()).unwrap();
        assert_eq!(k4.min, Some(0));
        assert_eq!(k4.optimal, vec![Partition::new(vec![VertexSet::full(4)])]);
        let p3 = brute_hcd(&Graph::path(3), conv()).unwrap();
        assert_eq!(p3.min, Some(2));
        assert_eq!(p3.optimal[0].len(), 3);
        assert_eq!(brute_hcd(&fixtures::two_k4_bridge(), conv()).unwrap().min, Some(1));
        assert!(brute_hcd(&Graph::new(11).unwrap(), conv()).is_err());
    }

    #[test]
    fn phcd_oracle_examples() {
        let two = Graph::complete(4).disjoint_union(&Graph::complete(4)).unwrap();
        assert!(brute_phcd(&two, 2, 0, conv()).unwrap());
        assert!(!brute_phcd(&two, 1, 99, conv()).unwrap());
        assert!(!brute_phcd(&fixtures::two_k4_bridge(), 2, 0, conv()).unwrap());
    }

    #[test]
    fn subset_oracle_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(brute_isolated(&k4, &[0; 4], 0, 4, conv()).unwrap(), Some(VertexSet::full(4)));
        assert_eq!(brute_isolated(&Graph::cycle(5), &[0; 5], 5, 3, conv()).unwrap(), None);
        assert_eq!(
            brute_isolated(&fixtures::k4_pendant(), &[0; 5], 1, 4, conv()).unwrap(),
            Some(VertexSet::full(4))
        );
        let s0 = VertexSet::singleton(0);
        assert_eq!(brute_seeded(&Graph::complete(5), &s0, 4, 0, conv()).unwrap(), Some(VertexSet::full(5)));
        assert_eq!(brute_seeded(&Graph::path(4), &VertexSet::singleton(1), 1, 3, conv()).unwrap(), None);
        let tri = brute_seeded(&k4, &s0, 2, 3, conv()).unwrap().unwrap();
        assert_eq!(tri.len(), 3);
    }

    #[test]
    fn cut_oracle_examples() {
        assert_eq!(brute_cuts(&Graph::path(3), 1).unwrap().len(), 3);
        assert_eq!(brute_cuts(&Graph::complete(4), 2).unwrap().len(), 1);
        assert_eq!(brute_cuts(&Graph::new(3).unwrap(), 0).unwrap().len(), 4);
    }
}
