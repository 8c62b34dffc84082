//! f-Isolated Highly Connected Subgraph: find `S` with `|S| = s`, `G[S]`
//! highly connected, and `|E(S, V ∖ S)| + Σ_{v ∈ S} f(v) ≤ k`.

use itertools::Itertools;

use super::connected_sets::enumerate_connected_sets;
use super::cube_root_floor;
use crate::context::{Context, Convention};
use crate::error::{Error, Result};
use crate::graph::{
    connected_components, global_min_cut, hc_unchecked, map_set, Graph,
    VertexSet,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedInstance {
    pub graph: Graph,
    /// Per-vertex charge `f(v)`; all zero for the plain problem.
    pub charges: Vec<u32>,
    pub k: usize,
    pub s: usize,
}

impl IsolatedInstance {
    pub fn plain(graph: Graph, k: usize, s: usize) -> Self {
        let charges = vec![0; graph.n()];
        IsolatedInstance {
            graph,
            charges,
            k,
            s,
        }
    }

    fn charge(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.charges[v] as usize).sum()
    }

    /// Boundary plus charges of `set`.
    pub fn cost(&self, set: &VertexSet) -> usize {
        self.graph.cut_size(set) + self.charge(set)
    }

    fn validate(&self) -> Result<()> {
        if self.charges.len() != self.graph.n() {
            return Err(Error::InvalidInstance(format!(
                "{} charges for {} vertices",
                self.charges.len(),
                self.graph.n()
            )));
        }
        if self.s == 0 {
            return Err(Error::InvalidInstance("target size must be positive".into()));
        }
        Ok(())
    }
}

/// Exact feasibility of `set` for `inst`.
pub fn isolated_feasible(inst: &IsolatedInstance, set: &VertexSet, conv: Convention) -> bool {
    inst.graph.check_subset(set).is_ok()
        && set.len() == inst.s
        && hc_unchecked(&inst.graph, set, conv)
        && inst.cost(set) <= inst.k
}

/// An instance after rule applications; `kept[i]` is the input vertex that
/// became vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    pub instance: IsolatedInstance,
    pub kept: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleOutcome {
    NotApplicable,
    /// A solution, in the labels of the rule's input.
    Yes(VertexSet),
    Applied(Reduced),
}

fn without(inst: &IsolatedInstance, gone: &VertexSet) -> Reduced {
    let (graph, kept) = inst.graph.induced(&(inst.graph.vertices() - *gone));
    let charges = kept.iter().map(|&v| inst.charges[v]).collect();
    Reduced {
        instance: IsolatedInstance {
            graph,
            charges,
            k: inst.k,
            s: inst.s,
        },
        kept,
    }
}

/// Rule 4: drop every component with fewer than `s` vertices.
pub fn apply_rule4(inst: &IsolatedInstance) -> RuleOutcome {
    let small = connected_components(&inst.graph)
        .into_iter()
        .filter(|c| c.len() < inst.s)
        .fold(VertexSet::new(), |acc, c| acc | c);
    if small.is_empty() {
        RuleOutcome::NotApplicable
    } else {
        RuleOutcome::Applied(without(inst, &small))
    }
}

/// Edge connectivity of `G[c]`, with `None` standing for infinity.
fn component_lambda(g: &Graph, c: &VertexSet) -> Option<usize> {
    if c.len() < 2 {
        return None;
    }
    let (sub, _) = g.induced(c);
    Some(global_min_cut(&sub).expect("two or more vertices").crossing)
}

/// Rule 5: a component whose edge connectivity exceeds `k` is either the
/// answer as a whole or cannot contain one.
pub fn apply_rule5(inst: &IsolatedInstance, conv: Convention) -> RuleOutcome {
    let g = &inst.graph;
    for c in connected_components(g) {
        if component_lambda(g, &c).is_some_and(|l| l <= inst.k) {
            continue;
        }
        if c.len() == inst.s && hc_unchecked(g, &c, conv) && inst.charge(&c) <= inst.k {
            return RuleOutcome::Yes(c);
        }
        return RuleOutcome::Applied(without(inst, &c));
    }
    RuleOutcome::NotApplicable
}

/// Rule 6: a component with a minimum cut of at most `s / 2` edges is split
/// along it, and each endpoint is charged for the edges it lost.
pub fn apply_rule6(inst: &IsolatedInstance) -> RuleOutcome {
    let g = &inst.graph;
    for c in connected_components(g) {
        let Some(lambda) = component_lambda(g, &c) else {
            continue;
        };
        if 2 * lambda > inst.s {
            continue;
        }
        let (sub, labels) = g.induced(&c);
        let cut = global_min_cut(&sub).expect("two or more vertices");
        let a = map_set(&cut.side1, &labels);
        let b = map_set(&cut.side2, &labels);
        let mut charges = inst.charges.clone();
        let mut doomed = Vec::new();
        for u in a.iter() {
            for v in (g.neighbors(u) & b).iter() {
                charges[u] += 1;
                charges[v] += 1;
                doomed.push((u, v));
            }
        }
        return RuleOutcome::Applied(Reduced {
            instance: IsolatedInstance {
                graph: g.without_edges(&doomed),
                charges,
                k: inst.k,
                s: inst.s,
            },
            kept: (0..g.n()).collect(),
        });
    }
    RuleOutcome::NotApplicable
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction {
    /// A solution in input labels.
    Yes(VertexSet),
    Reduced(Reduced),
}

/// Rules 4, 5, 6 in that order until none applies.
pub fn reduce_exhaustively(inst: &IsolatedInstance, conv: Convention) -> Reduction {
    let mut state = Reduced {
        instance: inst.clone(),
        kept: (0..inst.graph.n()).collect(),
    };
    loop {
        let mut outcome = apply_rule4(&state.instance);
        if outcome == RuleOutcome::NotApplicable {
            outcome = apply_rule5(&state.instance, conv);
        }
        if outcome == RuleOutcome::NotApplicable {
            outcome = apply_rule6(&state.instance);
        }
        match outcome {
            RuleOutcome::NotApplicable => return Reduction::Reduced(state),
            RuleOutcome::Yes(set) => return Reduction::Yes(map_set(&set, &state.kept)),
            RuleOutcome::Applied(step) => {
                state.kept = step.kept.iter().map(|&i| state.kept[i]).collect();
                state.instance = step.instance;
            }
        }
    }
}

/// Case `s ≤ k^{2/3}`: every connected set of size `s` whose vertex boundary
/// has at most `k` vertices, grown from each start vertex with all earlier
/// start vertices forbidden.
pub fn solve_isolated_case1(inst: &IsolatedInstance, ctx: &Context) -> Result<Option<VertexSet>> {
    let g = &inst.graph;
    ctx.find_any((0..g.n()).collect(), |v| {
        let forbidden = VertexSet::full(v);
        let mut found = None;
        let visited = enumerate_connected_sets(g, v, inst.s, inst.k, &forbidden, |b| {
            if isolated_feasible(inst, &b, ctx.convention) {
                found = Some(b);
                false
            } else {
                true
            }
        });
        ctx.stats.add_branch_nodes(visited as u64);
        Ok(found)
    })
}

/// Case `s > k^{2/3}`: some solution vertex `v` has at most `k^{1/3}`
/// neighbours outside. Guess `v` and those neighbours, then extend
/// `W = N[v] ∖ guess` vertex by vertex, with the guess as the initial
/// excluded set `B`.
pub fn solve_isolated_case2(inst: &IsolatedInstance, ctx: &Context) -> Result<Option<VertexSet>> {
    let g = &inst.graph;
    let limit = cube_root_floor(inst.k);
    let mut guesses = Vec::new();
    for v in 0..g.n() {
        let nv = g.neighbors(v).to_vec();
        for size in 0..=limit.min(nv.len()) {
            for out in nv.iter().copied().combinations(size) {
                guesses.push((v, out));
            }
        }
    }
    let comps = connected_components(g);
    ctx.find_any(guesses, |(v, out)| {
        let b: VertexSet = out.into_iter().collect();
        let w = g.closed_neighbors(v) - b;
        if w.len() > inst.s {
            return Ok(None);
        }
        let comp = comps.iter().find(|c| c.contains(v)).expect("v lies in some component");
        let budget = inst.k as i64 - g.edges_between(&w, &b) as i64 - inst.charge(&w) as i64;
        Ok(extend(inst, ctx, comp, w, b, budget))
    })
}

fn extend(
    inst: &IsolatedInstance,
    ctx: &Context,
    comp: &VertexSet,
    w: VertexSet,
    mut b: VertexSet,
    mut budget: i64,
) -> Option<VertexSet> {
    ctx.stats.add_branch_nodes(1);
    if budget < 0 {
        return None;
    }
    let g = &inst.graph;
    if w.len() == inst.s {
        return isolated_feasible(inst, &w, ctx.convention).then_some(w);
    }
    let frontier = w.iter().fold(VertexSet::new(), |acc, x| acc | g.neighbors(x)) & *comp;
    let mut open = frontier - w - b;
    for x in open.iter() {
        let inside = g.degree_in(x, &w);
        if 2 * inside + inst.s < 2 * w.len() {
            b.insert(x);
            open.remove(x);
            budget -= inside as i64;
        }
    }
    if budget < 0 {
        return None;
    }
    let x = open.first()?;
    let add = budget - g.degree_in(x, &b) as i64 - inst.charges[x] as i64;
    if let Some(found) = extend(inst, ctx, comp, w.with(x), b, add) {
        return Some(found);
    }
    let skip = budget - g.degree_in(x, &w) as i64;
    extend(inst, ctx, comp, w, b.with(x), skip)
}

/// Rules 4–6 to exhaustion, then the case split at `s = k^{2/3}`. The
/// answer is re-checked on the input instance.
pub fn solve_isolated(inst: &IsolatedInstance, ctx: &Context) -> Result<Option<VertexSet>> {
    if ctx.convention.k2_is_hc {
        return Err(Error::UnsupportedConvention("solve_isolated"));
    }
    inst.validate()?;
    if inst.s > inst.graph.n() {
        return Ok(None);
    }
    let found = match reduce_exhaustively(inst, ctx.convention) {
        Reduction::Yes(set) => Some(set),
        Reduction::Reduced(red) => {
            let r = &red.instance;
            if r.graph.n() == 0 {
                None
            } else {
                let local = if r.s.pow(3) <= r.k * r.k {
                    solve_isolated_case1(r, ctx)?
                } else {
                    solve_isolated_case2(r, ctx)?
                };
                local.map(|set| map_set(&set, &red.kept))
            }
        }
    };
    Ok(found.filter(|set| isolated_feasible(inst, set, ctx.convention)))
}
