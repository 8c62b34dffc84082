use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use itertools::Itertools;

use super::exact::exact_partition;
use super::{AffectedAccounting, HcdSolution};
use crate::context::Context;
use crate::error::Result;
use crate::graph::{hc_unchecked, Graph, Partition, VertexSet};
use crate::subset_conv::{
    build_cluster_function, convolve_at, local_adjacency, mask_edges_between, mask_to_set,
    min_plus_closure, min_plus_convolve_with, recover_partition, SetFunction,
};

const THRESHOLD: f64 = 1.57;
/// A cluster that is large enough contains a vertex with this many deleted
/// edges or fewer.
const MAX_GUESSED_EDGES: usize = 7;

/// Searches for a solution of cost at most `k` in which every vertex loses
/// at least one edge. Intended for connected graphs of diameter at most 2.
///
/// Small graphs go to the exact solver. Otherwise some vertex `s` loses
/// exactly one edge `st`, so `N[s] ∖ {t}` lies in one cluster. Either that
/// core is large and the rest is solved by one convolution, or a second
/// core is guessed around a vertex `t'` with at most seven deleted edges.
pub fn solve_affected(g: &Graph, k: usize, ctx: &Context) -> Result<Option<HcdSolution>> {
    Ok(affected_partition(g, k, ctx)?.map(|p| HcdSolution::from_partition(g, p)))
}

pub(crate) fn affected_partition(g: &Graph, k: usize, ctx: &Context) -> Result<Option<Partition>> {
    let n = g.n();
    let limit = THRESHOLD * k as f64;
    if n as f64 <= limit {
        return Ok(exact_partition(g, ctx)?.filter(|p| p.inter_block_edges(g).len() <= k));
    }
    if n > 2 * k {
        return Ok(None);
    }
    let mut search = Search {
        g,
        k,
        ctx,
        memo: HashMap::new(),
        seen: HashSet::new(),
    };
    for &(a, b) in g.edges() {
        for (s, t) in [(a, b), (b, a)] {
            ctx.stats.add_branch_nodes(1);
            let us = g.closed_neighbors(s).without(t);
            let found = if us.len() as f64 > n as f64 - limit {
                search.one_core(us)?
            } else {
                search.two_cores(us)?
            };
            if found.is_some() {
                return Ok(found);
            }
        }
    }
    Ok(None)
}

/// Closure tables over a residual universe `W`.
struct Closure {
    f: SetFunction,
    h: SetFunction,
    labels: Vec<usize>,
    adj: Vec<u32>,
}

impl Closure {
    fn full(&self) -> u32 {
        self.f.full_mask()
    }

    fn set(&self, mask: u32) -> VertexSet {
        mask_to_set(mask, &self.labels)
    }

    /// Per local vertex, the number of neighbours in `core`.
    fn counts(&self, g: &Graph, core: &VertexSet) -> Vec<u32> {
        self.labels.iter().map(|&v| g.degree_in(v, core) as u32).collect()
    }

    fn blocks_of(&self, mask: u32) -> Result<Vec<VertexSet>> {
        Ok(recover_partition(&self.f, &self.h, mask)?
            .into_iter()
            .map(|b| self.set(b))
            .collect())
    }
}

fn sum_over(counts: &[u32], mask: u32) -> u32 {
    let mut rest = mask;
    let mut total = 0;
    while rest != 0 {
        total += counts[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    total
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    ctx: &'a Context,
    memo: HashMap<VertexSet, Rc<Closure>>,
    seen: HashSet<(VertexSet, VertexSet)>,
}

impl Search<'_> {
    fn closure(&mut self, w: VertexSet) -> Result<Rc<Closure>> {
        if let Some(c) = self.memo.get(&w) {
            return Ok(c.clone());
        }
        let (f, labels) = build_cluster_function(self.g, &w, self.ctx.convention)?;
        let h = min_plus_closure(&f, 2 * self.g.edges_within(&w) as u32, self.ctx)?;
        let (adj, _) = local_adjacency(self.g, &w)?;
        let c = Rc::new(Closure { f, h, labels, adj });
        self.memo.insert(w, c.clone());
        Ok(c)
    }

    /// `min_S g(S) + h(W ∖ S)` with `g(S) = 2|E(W ∖ S, U)| + |E(S, W ∖ S)|`
    /// when `G[U ∪ S]` is highly connected.
    fn one_core(&mut self, us: VertexSet) -> Result<Option<Partition>> {
        let g = self.g;
        let w = g.vertices() - us;
        let cl = self.closure(w)?;
        let full = cl.full();
        let to_core = cl.counts(g, &us);
        let mut best: Option<(u32, u32)> = None;
        let mut s = full;
        loop {
            let rest = full & !s;
            if let Some(hr) = cl.h.get(rest) {
                if hc_unchecked(g, &(us | cl.set(s)), self.ctx.convention) {
                    let v = 2 * sum_over(&to_core, rest) + mask_edges_between(&cl.adj, s, rest) + hr;
                    if best.is_none_or(|(b, _)| v < b) {
                        best = Some((v, s));
                    }
                }
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & full;
        }
        match best {
            Some((v, s)) if v as usize <= 2 * self.k => {
                let mut blocks = cl.blocks_of(full & !s)?;
                blocks.push(us | cl.set(s));
                Ok(Some(Partition::new(blocks)))
            }
            _ => Ok(None),
        }
    }

    fn two_cores(&mut self, us: VertexSet) -> Result<Option<Partition>> {
        let g = self.g;
        let n = g.n();
        for tp in (g.vertices() - us).iter() {
            let nt = g.neighbors(tp);
            let forced = nt & us;
            if forced.len() > MAX_GUESSED_EDGES {
                continue;
            }
            let free = (nt - forced).to_vec();
            for extra in 0..=MAX_GUESSED_EDGES - forced.len() {
                for ys in free.iter().copied().combinations(extra) {
                    let ut = ys.iter().fold(g.closed_neighbors(tp) - forced, |acc, &y| acc.without(y));
                    let u = us | ut;
                    if 2 * u.len() + self.k < n || !self.seen.insert((us, ut)) {
                        continue;
                    }
                    let between = g.edges_between(&us, &ut);
                    let Some(left) = self.k.checked_sub(between) else {
                        continue;
                    };
                    self.ctx.stats.add_branch_nodes(1);
                    if let Some(p) = self.check_two(us, ut, 2 * left)? {
                        return Ok(Some(p));
                    }
                }
            }
        }
        Ok(None)
    }

    /// `(h ∗ g_s ∗ g_t)(W) ≤ budget` with `W = V ∖ (U_s ∪ U_t)`.
    fn check_two(&mut self, us: VertexSet, ut: VertexSet, budget: usize) -> Result<Option<Partition>> {
        let g = self.g;
        let conv = self.ctx.convention;
        let w = g.vertices() - us - ut;
        let cl = self.closure(w)?;
        let full = cl.full();
        let to_s = cl.counts(g, &us);
        let to_t = cl.counts(g, &ut);
        let bound = (3 * g.m()) as u32;
        let side = |core: &VertexSet, own: &[u32], other: &[u32]| {
            SetFunction::from_fn(cl.labels.len(), bound, |s| {
                if !hc_unchecked(g, &(*core | cl.set(s)), conv) {
                    return None;
                }
                let rest = full & !s;
                let charged = match self.ctx.accounting {
                    AffectedAccounting::Corrected => sum_over(own, rest),
                    AffectedAccounting::AsPublished => sum_over(other, s),
                };
                Some(2 * charged + mask_edges_between(&cl.adj, s, rest))
            })
        };
        let gs = side(&us, &to_s, &to_t)?;
        let gt = side(&ut, &to_t, &to_s)?;
        self.ctx.stats.add_convolutions(1);
        let gst = min_plus_convolve_with(&gs, &gt, self.ctx.backend)?;
        let Some(total) = convolve_at(&gst, &cl.h, full) else {
            return Ok(None);
        };
        if total as usize > budget {
            return Ok(None);
        }

        let mut x = full;
        let x = loop {
            if let (Some(a), Some(b)) = (gst.get(x), cl.h.get(full & !x)) {
                if a + b == total {
                    break x;
                }
            }
            x = (x - 1) & full;
        };
        let target = gst.get(x).expect("finite on the chosen split");
        let mut ss = x;
        let ss = loop {
            if let (Some(a), Some(b)) = (gs.get(ss), gt.get(x & !ss)) {
                if a + b == target {
                    break ss;
                }
            }
            ss = (ss - 1) & x;
        };
        let mut blocks = cl.blocks_of(full & !x)?;
        blocks.push(us | cl.set(ss));
        blocks.push(ut | cl.set(x & !ss));
        Ok(Some(Partition::new(blocks)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hcd::verify_hcd_solution;
    use crate::io::fixtures;

    #[test]
    fn prism_examples() {
        let ctx = Context::default();
        let g = fixtures::prism();
        let sol = solve_affected(&g, 3, &ctx).unwrap().unwrap();
        assert!(verify_hcd_solution(&g, &sol, 3, ctx.convention));
        assert!(solve_affected(&g, 2, &ctx).unwrap().is_none());
    }

    #[test]
    fn guard_rejects_large_graphs() {
        let ctx = Context::default();
        assert!(solve_affected(&Graph::complete(4), 0, &ctx).unwrap().is_none());
    }
}
