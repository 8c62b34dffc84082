use itertools::Itertools;

use crate::context::{Context, Convention};
use crate::error::{Error, Result};
use crate::graph::{hc_unchecked, Graph, VertexSet};

/// Keep one highly connected component `C ⊇ seed` with `|C| = |seed| + a`,
/// deleting every other edge, at a cost of at most `k` deletions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeededInstance {
    pub graph: Graph,
    pub seed: VertexSet,
    pub a: usize,
    pub k: usize,
}

/// Edges deleted when only `G[c]` survives.
pub fn seeded_cost(g: &Graph, c: &VertexSet) -> usize {
    g.m() - g.edges_within(c)
}

pub fn verify_seeded(inst: &SeededInstance, c: &VertexSet, conv: Convention) -> bool {
    let g = &inst.graph;
    g.check_subset(c).is_ok()
        && inst.seed.is_subset(c)
        && c.len() == inst.seed.len() + inst.a
        && hc_unchecked(g, c, conv)
        && seeded_cost(g, c) <= inst.k
}

/// Two regimes split at `a = 2√k`. Few additions: try every extension.
/// Many additions: every member of `C` has degree above `√k`, so lighter
/// vertices are stripped first, and the few remaining outsiders are guessed.
pub fn solve_seeded(inst: &SeededInstance, ctx: &Context) -> Result<Option<VertexSet>> {
    if ctx.convention.k2_is_hc {
        return Err(Error::UnsupportedConvention("solve_seeded"));
    }
    let g = &inst.graph;
    g.check_subset(&inst.seed)?;
    if inst.seed.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let (k, a) = (inst.k, inst.a);
    if inst.seed.len() + a > g.n() {
        return Ok(None);
    }
    let accept = |c: VertexSet| verify_seeded(inst, &c, ctx.convention).then_some(c);

    if a * a <= 4 * k {
        let pool = (g.vertices() - inst.seed).to_vec();
        let combos: Vec<Vec<usize>> = pool.into_iter().combinations(a).collect();
        return ctx.find_any(combos, |ext| {
            ctx.stats.add_branch_nodes(1);
            Ok(accept(ext.into_iter().fold(inst.seed, |c, v| c.with(v))))
        });
    }

    let mut alive = g.vertices();
    let mut budget = k;
    loop {
        let light = alive.iter().find(|&v| {
            let d = g.degree_in(v, &alive);
            d * d < k
        });
        let Some(x) = light else { break };
        if inst.seed.contains(x) {
            return Ok(None);
        }
        let Some(left) = budget.checked_sub(g.degree_in(x, &alive)) else {
            return Ok(None);
        };
        budget = left;
        alive.remove(x);
    }
    let Some(drop) = alive.len().checked_sub(inst.seed.len() + a) else {
        return Ok(None);
    };
    // each outsider still has degree at least √k, all of it deleted
    if drop * drop > 4 * k {
        return Ok(None);
    }
    let pool = (alive - inst.seed).to_vec();
    let combos: Vec<Vec<usize>> = pool.into_iter().combinations(drop).collect();
    ctx.find_any(combos, |out| {
        ctx.stats.add_branch_nodes(1);
        Ok(accept(out.into_iter().fold(alive, |c, v| c.without(v))))
    })
}
