use super::affected::affected_partition;
use super::rules::reduce_exhaustively;
use super::unaffected::unaffected_partition;
use super::{HcdInstance, HcdSolution};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::graph::{
    connected_components, find_distance3_path, hc_unchecked, Graph, Partition, VertexSet,
};

/// Decides whether at most `inst.k` deletions suffice, returning a
/// certificate when they do.
///
/// Only the default size-2 convention is supported, since the reduction
/// rules depend on it.
pub fn hcd_fpt(inst: &HcdInstance, ctx: &Context) -> Result<Option<HcdSolution>> {
    if ctx.convention.k2_is_hc {
        return Err(Error::UnsupportedConvention("hcd_fpt"));
    }
    Ok(decide(&inst.graph, inst.k, ctx)?.map(|p| HcdSolution::from_partition(&inst.graph, p)))
}

/// The three children `(G − e, k − 1)` for the edges `e` of an induced path
/// between two vertices at distance 3.
pub fn branch_diameter(inst: &HcdInstance) -> Result<[HcdInstance; 3]> {
    let path = find_distance3_path(&inst.graph).ok_or(Error::NotApplicable("diameter is at most 2"))?;
    let k = inst
        .k
        .checked_sub(1)
        .ok_or(Error::NotApplicable("no budget left to branch"))?;
    Ok([0, 1, 2].map(|i| {
        HcdInstance::new(inst.graph.without_edges(&[(path[i], path[i + 1])]), k)
    }))
}

/// Partition of `g` with at most `k` inter-block edges, if one exists.
fn decide(g: &Graph, k: usize, ctx: &Context) -> Result<Option<Partition>> {
    ctx.stats.add_branch_nodes(1);
    let Some(red) = reduce_exhaustively(&HcdInstance::new(g.clone(), k), ctx.convention) else {
        return Ok(None);
    };
    let inner = decide_reduced(&red.instance.graph, red.instance.k, ctx)?;
    Ok(inner.map(|p| {
        let mut blocks = p.relabel(&red.kept).blocks().to_vec();
        blocks.extend(red.clusters);
        Partition::new(blocks)
    }))
}

fn decide_reduced(g: &Graph, k: usize, ctx: &Context) -> Result<Option<Partition>> {
    if g.n() == 0 {
        return Ok(Some(Partition::default()));
    }
    let comps = connected_components(g);
    if comps.len() > 1 {
        return split_components(g, k, &comps, ctx);
    }
    if k > 0 {
        if let Some(path) = find_distance3_path(g) {
            let children: Vec<Graph> = (0..3)
                .map(|i| g.without_edges(&[(path[i], path[i + 1])]))
                .collect();
            return ctx.find_any(children, |child| decide(&child, k - 1, ctx));
        }
    } else if find_distance3_path(g).is_some() {
        return Ok(None);
    }
    if hc_unchecked(g, &g.vertices(), ctx.convention) {
        return Ok(Some(Partition::new(vec![g.vertices()])));
    }
    if let Some(p) = unaffected_partition(g, k, ctx)? {
        return Ok(Some(p));
    }
    affected_partition(g, k, ctx)
}

/// Finds each component's minimum by raising its budget from 0, and sums.
fn split_components(
    g: &Graph,
    k: usize,
    comps: &[VertexSet],
    ctx: &Context,
) -> Result<Option<Partition>> {
    let mut left = k;
    let mut blocks = Vec::new();
    for comp in comps {
        let (sub, labels) = g.induced(comp);
        let mut found = None;
        for j in 0..=left {
            if let Some(p) = decide(&sub, j, ctx)? {
                found = Some((j, p));
                break;
            }
        }
        let Some((j, p)) = found else {
            return Ok(None);
        };
        left -= j;
        blocks.extend_from_slice(p.relabel(&labels).blocks());
    }
    Ok(Some(Partition::new(blocks)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Convention;
    use crate::hcd::verify_hcd_solution;
    use crate::io::fixtures;

    fn run(g: &Graph, k: usize) -> Option<HcdSolution> {
        let ctx = Context::default();
        let sol = hcd_fpt(&HcdInstance::new(g.clone(), k), &ctx).unwrap();
        if let Some(s) = &sol {
            assert!(verify_hcd_solution(g, s, k, ctx.convention));
        }
        sol
    }

    #[test]
    fn fpt_examples() {
        let g = fixtures::two_k4_bridge();
        assert_eq!(run(&g, 1).unwrap().cost(), 1);
        assert!(run(&g, 0).is_none());
        assert!(run(&fixtures::prism(), 3).is_some());
        assert!(run(&fixtures::prism(), 2).is_none());
        assert!(run(&Graph::cycle(5), 5).is_some());
        assert!(run(&Graph::cycle(5), 4).is_none());
    }

    #[test]
    fn branching_examples() {
        let kids = branch_diameter(&HcdInstance::new(Graph::path(4), 3)).unwrap();
        for (i, kid) in kids.iter().enumerate() {
            assert_eq!(kid.k, 2);
            assert!(!kid.graph.has_edge(i, i + 1));
            assert_eq!(kid.graph.m(), 2);
        }
        assert!(branch_diameter(&HcdInstance::new(Graph::cycle(5), 3)).is_err());
        let kids = branch_diameter(&HcdInstance::new(Graph::path(5), 1)).unwrap();
        assert!(kids.iter().all(|c| c.k == 0));
    }

    #[test]
    fn rejects_loose_convention() {
        let ctx = Context::with_convention(Convention { k2_is_hc: true });
        let inst = HcdInstance::new(Graph::complete(3), 0);
        assert!(matches!(hcd_fpt(&inst, &ctx), Err(Error::UnsupportedConvention(_))));
    }
}
