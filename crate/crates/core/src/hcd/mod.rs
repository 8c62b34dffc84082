//! Highly Connected Deletion: delete the fewest edges so that every
//! remaining connected component is highly connected.
//!
//! [`exact_hcd`] runs the subset-convolution dynamic program in `O*(2^n)`.
//! [`hcd_fpt`] decides `(G, k)` in `O*(3^k)` with reduction rules, branching
//! on induced paths of length three, and two leaf solvers that distinguish
//! whether some vertex keeps all of its edges.

mod affected;
mod exact;
mod fpt;
pub mod rules;
mod unaffected;

pub use affected::solve_affected;
pub use exact::{exact_hcd, exact_hcd_value};
pub use fpt::{branch_diameter, hcd_fpt};
pub use unaffected::solve_unaffected;

use crate::context::Convention;
use crate::graph::{hc_unchecked, Graph, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HcdInstance {
    pub graph: Graph,
    pub k: usize,
}

impl HcdInstance {
    pub fn new(graph: Graph, k: usize) -> Self {
        HcdInstance { graph, k }
    }
}

/// Deleted edges together with the resulting clusters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HcdSolution {
    pub deleted_edges: Vec<(usize, usize)>,
    pub partition: Partition,
}

impl HcdSolution {
    /// The solution whose deleted edges are the inter-block edges of `g`.
    pub fn from_partition(g: &Graph, partition: Partition) -> Self {
        HcdSolution {
            deleted_edges: partition.inter_block_edges(g),
            partition,
        }
    }

    pub fn cost(&self) -> usize {
        self.deleted_edges.len()
    }
}

/// How the two-cluster check of the all-affected solver charges edges
/// between the unassigned remainder and the two known cluster cores.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum AffectedAccounting {
    /// Every deleted edge outside `E(U_s, U_t)` is counted exactly twice.
    #[default]
    Corrected,
    /// `g_s(S) = 2|E(S, U_t)| + |E(S, W ∖ S)|`, which never charges edges
    /// from the remainder to `U_s ∪ U_t` and can therefore under-count.
    AsPublished,
}

/// Whether `sol` is a valid certificate for `(g, k)`.
pub fn verify_hcd_solution(g: &Graph, sol: &HcdSolution, k: usize, conv: Convention) -> bool {
    let p = &sol.partition;
    if !p.covers_exactly(&g.vertices()) || p.blocks().iter().any(|b| !hc_unchecked(g, b, conv)) {
        return false;
    }
    let mut deleted = sol.deleted_edges.clone();
    for e in &mut deleted {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    deleted.sort_unstable();
    deleted == p.inter_block_edges(g) && deleted.len() <= k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::fixtures;
    use crate::VertexSet;

    #[test]
    fn verifier_examples() {
        let conv = Convention::default();
        let g = fixtures::two_k4_bridge();
        let p = Partition::new(vec![(0..4).collect(), (4..8).collect()]);
        let sol = HcdSolution::from_partition(&g, p);
        assert!(verify_hcd_solution(&g, &sol, 1, conv));
        assert!(!verify_hcd_solution(&g, &sol, 0, conv));

        let c5 = Graph::cycle(5);
        let bad = HcdSolution::from_partition(&c5, Partition::new(vec![c5.vertices()]));
        assert!(!verify_hcd_solution(&c5, &bad, 10, conv));

        let missing = HcdSolution {
            deleted_edges: vec![],
            partition: Partition::new(vec![VertexSet::full(4), (4..8).collect()]),
        };
        assert!(!verify_hcd_solution(&g, &missing, 5, conv));
    }
}
