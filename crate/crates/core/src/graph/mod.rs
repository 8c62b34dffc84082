//! Graph representation and the connectivity primitives every solver uses.

mod connectivity;
mod distance;
mod vertex_set;

pub use connectivity::{
    connected_components, edge_connectivity, global_min_cut, is_highly_connected,
    is_highly_connected_with, k_connected_classes, local_edge_connectivity, pairwise_k_connected,
};
pub use distance::{diameter, distances, find_distance3_path, Distances};
pub use vertex_set::{VertexSet, MAX_VERTICES};
pub(crate) use connectivity::hc_unchecked;

use std::fmt;

use crate::error::{Error, Result};

/// Simple undirected graph on the vertices `0..n`.
///
/// Immutable once built; edge removal and induced subgraphs return new graphs.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    /// Canonical `(u, v)` pairs with `u < v`, sorted.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edgeless graph.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                limit: MAX_VERTICES,
                what: "Graph",
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(); n],
            edges: Vec::new(),
        })
    }

    /// Builds a graph, rejecting self-loops, parallel edges and bad indices.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !g.adj[u].insert(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[v].insert(u);
            g.edges.push((u.min(v), u.max(v)));
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let mut edges = Vec::new();
        for (u, nb) in adj.iter().enumerate() {
            edges.extend(nb.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        Graph {
            n: adj.len(),
            adj,
            edges,
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path graph")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle graph")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn degree_in(&self, v: usize, s: &VertexSet) -> usize {
        self.adj[v].intersection_len(s)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    pub fn check_subset(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n) {
            Some(v) => Err(Error::VertexOutOfRange { v, n: self.n }),
            None => Ok(()),
        }
    }

    /// `|E(G[s])|`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.degree_in(v, s)).sum::<usize>() / 2
    }

    /// `|E(a, b)|` for disjoint `a` and `b`.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|v| self.degree_in(v, b)).sum()
    }

    /// Number of edges with exactly one endpoint in `s`.
    pub fn cut_size(&self, s: &VertexSet) -> usize {
        let outside = self.vertices() - *s;
        self.edges_between(s, &outside)
    }

    /// The same vertex set without the given edges (missing edges are ignored).
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in removed {
            adj[u].remove(v);
            adj[v].remove(u);
        }
        Graph::from_adjacency(adj)
    }

    /// The induced subgraph `G[s]`, relabelled to `0..|s|` in increasing
    /// order, together with the original label of every new vertex.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let adj = labels
            .iter()
            .map(|&v| (self.adj[v] & *s).iter().map(|w| index[w]).collect())
            .collect();
        (Graph::from_adjacency(adj), labels)
    }

    /// `self` on `0..n` followed by `other` shifted by `n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n + other.n, edges)
    }

    /// Adds edges to a copy of the graph.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().chain(extra).copied())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A bipartition `(side1, side2)` of the vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cut {
    pub side1: VertexSet,
    pub side2: VertexSet,
    pub crossing: usize,
}

impl Cut {
    pub fn new(g: &Graph, side1: VertexSet) -> Cut {
        let side2 = g.vertices() - side1;
        Cut {
            side1,
            side2,
            crossing: g.edges_between(&side1, &side2),
        }
    }

    /// The same cut with vertex 0 on `side1`.
    pub fn canonical(self) -> Cut {
        if self.side1.contains(0) || self.side1.is_empty() && self.side2.is_empty() {
            self
        } else {
            Cut {
                side1: self.side2,
                side2: self.side1,
                crossing: self.crossing,
            }
        }
    }
}

/// Disjoint vertex blocks, kept sorted by smallest member.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<VertexSet>,
}

impl Partition {
    pub fn new(mut blocks: Vec<VertexSet>) -> Self {
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by_key(|b| b.first());
        Partition { blocks }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Whether the blocks are pairwise disjoint and cover exactly `universe`.
    pub fn covers_exactly(&self, universe: &VertexSet) -> bool {
        let mut seen = VertexSet::new();
        for b in &self.blocks {
            if !b.is_disjoint(&seen) {
                return false;
            }
            seen |= *b;
        }
        seen == *universe
    }

    /// Block containing `v`.
    pub fn block_of(&self, v: usize) -> Option<&VertexSet> {
        self.blocks.iter().find(|b| b.contains(v))
    }

    /// Edges of `g` whose endpoints lie in different blocks.
    pub fn inter_block_edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        g.edges()
            .iter()
            .copied()
            .filter(|&(u, v)| !self.block_of(u).is_some_and(|b| b.contains(v)))
            .collect()
    }

    /// Relabels every block through `labels[local] = global`.
    pub fn relabel(&self, labels: &[usize]) -> Partition {
        Partition::new(self.blocks.iter().map(|b| map_set(b, labels)).collect())
    }

    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(VertexSet::to_vec).collect()
    }
}

impl FromIterator<VertexSet> for Partition {
    fn from_iter<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        Partition::new(iter.into_iter().collect())
    }
}

/// Maps a set of local ids through `labels[local] = global`.
pub fn map_set(s: &VertexSet, labels: &[usize]) -> VertexSet {
    s.iter().map(|v| labels[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { v: 2, n: 2 })
        );
        assert!(Graph::new(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn invariants_hold() {
        let g = Graph::from_edges(5, [(3, 1), (0, 4), (2, 1), (4, 3)]).unwrap();
        assert_eq!(g.edges(), &[(0, 4), (1, 2), (1, 3), (3, 4)]);
        let degree_sum: usize = (0..5).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.m());
        for &(u, v) in g.edges() {
            assert!(g.has_edge(u, v) && g.has_edge(v, u));
        }
    }

    #[test]
    fn cut_sizes() {
        let two_k4 = crate::io::fixtures::two_k4_bridge();
        let left: VertexSet = (0..4).collect();
        assert_eq!(two_k4.cut_size(&left), 1);
        let k4 = Graph::complete(4);
        assert_eq!(k4.cut_size(&[0, 1].into_iter().collect()), 4);
        assert_eq!(k4.cut_size(&VertexSet::new()), 0);
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::path(5);
        let (h, labels) = g.induced(&[1, 2, 4].into_iter().collect());
        assert_eq!(labels, vec![1, 2, 4]);
        assert_eq!(h.edges(), &[(0, 1)]);
    }

    #[test]
    fn partition_helpers() {
        let g = crate::io::fixtures::two_k4_bridge();
        let p = Partition::new(vec![(4..8).collect(), (0..4).collect()]);
        assert_eq!(p.blocks()[0].first(), Some(0));
        assert!(p.covers_exactly(&g.vertices()));
        assert_eq!(p.inter_block_edges(&g), vec![(0, 4)]);
    }
}
