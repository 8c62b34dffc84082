//! Small named graphs used throughout the tests and the benchmark harness.

use std::collections::BTreeMap;

use crate::graph::Graph;

fn clique_edges(vs: std::ops::Range<usize>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in vs.clone() {
        for v in u + 1..vs.end {
            out.push((u, v));
        }
    }
    out
}

/// `K4` on `{0..3}` and `K4` on `{4..7}` joined by the bridge `(0, 4)`.
pub fn two_k4_bridge() -> Graph {
    let mut edges = clique_edges(0..4);
    edges.extend(clique_edges(4..8));
    edges.push((0, 4));
    Graph::from_edges(8, edges).unwrap()
}

/// `K4` plus the pendant edge `(0, 4)`.
pub fn k4_pendant() -> Graph {
    pendant(4)
}

/// `K9` plus the pendant edge `(0, 9)`.
pub fn k9_pendant() -> Graph {
    pendant(9)
}

/// `K_c` plus the pendant edge `(0, c)`.
pub fn pendant(c: usize) -> Graph {
    let mut edges = clique_edges(0..c);
    edges.push((0, c));
    Graph::from_edges(c + 1, edges).unwrap()
}

/// Triangles `{0,1,2}` and `{3,4,5}` with the matching `(0,3), (1,4), (2,5)`.
pub fn prism() -> Graph {
    Graph::from_edges(
        6,
        [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap()
}

pub fn fixtures() -> BTreeMap<&'static str, Graph> {
    BTreeMap::from([
        ("K2", Graph::complete(2)),
        ("K4", Graph::complete(4)),
        ("K5", Graph::complete(5)),
        ("P3", Graph::path(3)),
        ("P4", Graph::path(4)),
        ("C5", Graph::cycle(5)),
        ("TwoK4Bridge", two_k4_bridge()),
        ("K4Pendant", k4_pendant()),
        ("Prism", prism()),
        ("K9Pendant", k9_pendant()),
    ])
}
