//! Polynomial-time reduction rules for the parameterized solver.
//!
//! * Rule 1 removes components that are already highly connected.
//! * Rule 2 deletes every edge whose endpoints share no neighbour.
//! * Rule 3 settles a class of pairwise `k`-connected vertices larger than
//!   `2k`: it must be a cluster on its own.
//!
//! The rules assume the default size-2 convention.

use super::HcdInstance;
use crate::context::Convention;
use crate::graph::{
    connected_components, hc_unchecked, k_connected_classes, map_set, VertexSet,
};

/// An instance after one or more rule applications.
///
/// `kept[i]` is the vertex of the input graph that became vertex `i`, and
/// `clusters` are the settled blocks in input-graph labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    pub instance: HcdInstance,
    pub kept: Vec<usize>,
    pub clusters: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleOutcome {
    NotApplicable,
    /// The instance has no solution.
    No,
    Applied(Reduced),
}

fn remove_vertices(inst: &HcdInstance, gone: &VertexSet, k: usize, clusters: Vec<VertexSet>) -> Reduced {
    let (graph, kept) = inst.graph.induced(&(inst.graph.vertices() - *gone));
    Reduced {
        instance: HcdInstance { graph, k },
        kept,
        clusters,
    }
}

pub fn apply_rule1(inst: &HcdInstance, conv: Convention) -> RuleOutcome {
    let g = &inst.graph;
    let done: Vec<VertexSet> = connected_components(g)
        .into_iter()
        .filter(|c| hc_unchecked(g, c, conv))
        .collect();
    if done.is_empty() {
        return RuleOutcome::NotApplicable;
    }
    let gone = done.iter().fold(VertexSet::new(), |acc, c| acc | *c);
    RuleOutcome::Applied(remove_vertices(inst, &gone, inst.k, done))
}

/// Deletes all currently applicable edges at once; deleting one never makes
/// another edge inapplicable because common neighbourhoods only shrink.
pub fn apply_rule2(inst: &HcdInstance) -> RuleOutcome {
    let g = &inst.graph;
    let doomed: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| g.neighbors(u).is_disjoint(&g.neighbors(v)))
        .collect();
    if doomed.is_empty() {
        return RuleOutcome::NotApplicable;
    }
    match inst.k.checked_sub(doomed.len()) {
        None => RuleOutcome::No,
        Some(k) => RuleOutcome::Applied(Reduced {
            instance: HcdInstance {
                graph: g.without_edges(&doomed),
                k,
            },
            kept: (0..g.n()).collect(),
            clusters: Vec::new(),
        }),
    }
}

/// Acts on the first class (by smallest member) with more than `2k` vertices.
pub fn apply_rule3(inst: &HcdInstance, conv: Convention) -> RuleOutcome {
    let g = &inst.graph;
    let Some(class) = k_connected_classes(g, inst.k)
        .into_iter()
        .find(|c| c.len() > 2 * inst.k)
    else {
        return RuleOutcome::NotApplicable;
    };
    if !hc_unchecked(g, &class, conv) {
        return RuleOutcome::No;
    }
    match inst.k.checked_sub(g.cut_size(&class)) {
        None => RuleOutcome::No,
        Some(k) => RuleOutcome::Applied(remove_vertices(inst, &class, k, vec![class])),
    }
}

/// Applies rules 1, 2, 3 in that order until none fires. `None` means NO.
pub fn reduce_exhaustively(inst: &HcdInstance, conv: Convention) -> Option<Reduced> {
    let mut state = Reduced {
        instance: inst.clone(),
        kept: (0..inst.graph.n()).collect(),
        clusters: Vec::new(),
    };
    loop {
        let outcome = [
            apply_rule1 as fn(&HcdInstance, Convention) -> RuleOutcome,
            |i, _| apply_rule2(i),
            apply_rule3,
        ]
        .iter()
        .map(|rule| rule(&state.instance, conv))
        .find(|o| *o != RuleOutcome::NotApplicable);
        match outcome {
            None => return Some(state),
            Some(RuleOutcome::No) => return None,
            Some(RuleOutcome::Applied(step)) => {
                state
                    .clusters
                    .extend(step.clusters.iter().map(|c| map_set(c, &state.kept)));
                state.kept = step.kept.iter().map(|&i| state.kept[i]).collect();
                state.instance = step.instance;
            }
            Some(RuleOutcome::NotApplicable) => unreachable!(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::io::fixtures;

    fn conv() -> Convention {
        Convention::default()
    }

    #[test]
    fn rule2_examples() {
        let p4 = HcdInstance::new(Graph::path(4), 3);
        let RuleOutcome::Applied(r) = apply_rule2(&p4) else {
            panic!("rule 2 should apply");
        };
        assert_eq!(r.instance.graph.m(), 0);
        assert_eq!(r.instance.k, 0);
        assert_eq!(apply_rule2(&HcdInstance::new(Graph::path(4), 2)), RuleOutcome::No);
        assert_eq!(
            apply_rule2(&HcdInstance::new(Graph::complete(4), 0)),
            RuleOutcome::NotApplicable
        );
    }

    #[test]
    fn rule1_removes_hc_components() {
        let g = Graph::complete(4).disjoint_union(&Graph::path(3)).unwrap();
        let RuleOutcome::Applied(r) = apply_rule1(&HcdInstance::new(g, 0), conv()) else {
            panic!("rule 1 should apply");
        };
        assert_eq!(r.kept, vec![4, 5, 6]);
        assert_eq!(r.clusters, vec![(0..4).collect()]);
    }

    #[test]
    fn rule3_on_bridged_cliques() {
        let inst = HcdInstance::new(fixtures::two_k4_bridge(), 1);
        let RuleOutcome::Applied(r) = apply_rule3(&inst, conv()) else {
            panic!("rule 3 should apply");
        };
        assert_eq!(r.clusters, vec![(0..4).collect()]);
        assert_eq!(r.instance.k, 0);
        let done = reduce_exhaustively(&inst, conv()).unwrap();
        assert_eq!(done.instance.graph.n(), 0);
        assert_eq!(done.clusters.len(), 2);
        assert!(reduce_exhaustively(&HcdInstance::new(fixtures::two_k4_bridge(), 0), conv()).is_none());
    }
}
