use itertools::Itertools;

use super::exact::exact_partition;
use super::HcdSolution;
use crate::context::Context;
use crate::error::Result;
use crate::graph::{hc_unchecked, Graph, Partition, VertexSet};

/// Searches for a solution of cost at most `k` in which some vertex `u`
/// keeps all its edges, so that its cluster is `N[u]` plus a subset of the
/// vertices sharing at least three neighbours with `u`.
///
/// Intended for connected graphs of diameter at most 2 on which the
/// reduction rules no longer apply.
pub fn solve_unaffected(g: &Graph, k: usize, ctx: &Context) -> Result<Option<HcdSolution>> {
    Ok(unaffected_partition(g, k, ctx)?.map(|p| HcdSolution::from_partition(g, p)))
}

pub(crate) fn unaffected_partition(g: &Graph, k: usize, ctx: &Context) -> Result<Option<Partition>> {
    ctx.find_any((0..g.n()).collect(), |u| try_vertex(g, k, u, ctx))
}

fn try_vertex(g: &Graph, k: usize, u: usize, ctx: &Context) -> Result<Option<Partition>> {
    let nu = g.neighbors(u);
    let closed = g.closed_neighbors(u);
    let mut w12 = Vec::new();
    let mut wge3 = Vec::new();
    for v in (g.vertices() - closed).iter() {
        match g.degree_in(v, &nu) {
            0 => {}
            1 | 2 => w12.push(v),
            _ => wge3.push(v),
        }
    }
    for size in 0..nu.len().min(k + 1).min(wge3.len() + 1) {
        if 3 * (wge3.len() - size) + w12.len() > k {
            continue;
        }
        for part in wge3.iter().copied().combinations(size) {
            ctx.stats.add_branch_nodes(1);
            let q = part.iter().fold(closed, |acc, &v| acc.with(v));
            if !hc_unchecked(g, &q, ctx.convention) {
                continue;
            }
            let Some(budget) = k.checked_sub(g.cut_size(&q)) else {
                continue;
            };
            let rest = g.vertices() - q;
            let (sub, labels) = g.induced(&rest);
            if let Some(p) = exact_partition(&sub, ctx)? {
                if p.inter_block_edges(&sub).len() <= budget {
                    let mut blocks: Vec<VertexSet> = p.relabel(&labels).blocks().to_vec();
                    blocks.push(q);
                    return Ok(Some(Partition::new(blocks)));
                }
            }
        }
    }
    Ok(None)
}
