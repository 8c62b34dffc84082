use super::HcdSolution;
use crate::context::Context;
use crate::error::Result;
use crate::graph::{Graph, Partition};
use crate::subset_conv::{build_cluster_function, mask_to_set, min_plus_closure, recover_partition};

/// Optimal partition of `g` by the closure of the cluster function, or
/// `None` when no partition into highly connected blocks exists.
pub(crate) fn exact_partition(g: &Graph, ctx: &Context) -> Result<Option<Partition>> {
    if g.n() == 0 {
        return Ok(Some(Partition::default()));
    }
    let (f, labels) = build_cluster_function(g, &g.vertices(), ctx.convention)?;
    // each deleted edge is on the boundary of two blocks
    let h = min_plus_closure(&f, 2 * g.m() as u32, ctx)?;
    let full = f.full_mask();
    if h.get(full).is_none() {
        return Ok(None);
    }
    let blocks = recover_partition(&f, &h, full)?;
    Ok(Some(Partition::new(
        blocks.into_iter().map(|b| mask_to_set(b, &labels)).collect(),
    )))
}

/// Minimum-size deletion set in `O*(2^n)`; `None` if infeasible.
pub fn exact_hcd(g: &Graph, ctx: &Context) -> Result<Option<HcdSolution>> {
    Ok(exact_partition(g, ctx)?.map(|p| HcdSolution::from_partition(g, p)))
}

/// Minimum number of deleted edges, without a certificate.
pub fn exact_hcd_value(g: &Graph, ctx: &Context) -> Result<Option<usize>> {
    if g.n() == 0 {
        return Ok(Some(0));
    }
    let (f, _) = build_cluster_function(g, &g.vertices(), ctx.convention)?;
    let h = min_plus_closure(&f, 2 * g.m() as u32, ctx)?;
    Ok(h.get(f.full_mask()).map(|v| v as usize / 2))
}
