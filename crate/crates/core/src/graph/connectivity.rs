use std::collections::VecDeque;

use super::{Cut, Graph, VertexSet};
use crate::context::Convention;
use crate::error::{Error, Result};

/// Whether `G[s]` is highly connected under the default convention.
pub fn is_highly_connected(g: &Graph, s: &VertexSet) -> Result<bool> {
    is_highly_connected_with(g, s, Convention::default())
}

/// Degree test: every vertex of `G[s]` has induced degree greater than
/// `|s| / 2`. Singletons pass; pairs follow `conv`.
pub fn is_highly_connected_with(g: &Graph, s: &VertexSet, conv: Convention) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    g.check_subset(s)?;
    Ok(hc_unchecked(g, s, conv))
}

#[inline]
pub(crate) fn hc_unchecked(g: &Graph, s: &VertexSet, conv: Convention) -> bool {
    let size = s.len();
    match size {
        0 => false,
        1 => true,
        2 => {
            conv.k2_is_hc && {
                let mut it = s.iter();
                let (u, v) = (it.next().unwrap(), it.next().unwrap());
                g.has_edge(u, v)
            }
        }
        _ => s.iter().all(|v| 2 * g.degree_in(v, s) > size),
    }
}

/// Maximal connected vertex sets, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    components_within(g, &g.vertices())
}

/// Connected components of `G[within]`.
pub(crate) fn components_within(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let mut left = *within;
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in frontier.iter() {
                next |= g.neighbors(v);
            }
            next = (next & *within) - comp;
            comp |= next;
            frontier = next;
        }
        left -= comp;
        out.push(comp);
    }
    out
}

/// Global minimum cut by Stoer–Wagner.
///
/// The witness is the first minimum phase cut found, oriented so that
/// `side1` contains vertex 0. A disconnected graph yields crossing 0.
pub fn global_min_cut(g: &Graph) -> Result<Cut> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    let mut w = vec![vec![0u32; n]; n];
    for &(u, v) in g.edges() {
        w[u][v] = 1;
        w[v][u] = 1;
    }
    let mut groups: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best: Option<(u32, VertexSet)> = None;

    while active.len() > 1 {
        let mut in_a = vec![false; n];
        let mut weight = vec![0u32; n];
        let mut prev = active[0];
        let mut last = active[0];
        for step in 0..active.len() {
            let next = if step == 0 {
                active[0]
            } else {
                *active
                    .iter()
                    .filter(|&&v| !in_a[v])
                    .max_by(|&&a, &&b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                    .unwrap()
            };
            in_a[next] = true;
            prev = last;
            last = next;
            for &v in &active {
                if !in_a[v] {
                    weight[v] += w[next][v];
                }
            }
        }
        let phase = weight[last];
        if best.as_ref().is_none_or(|(c, _)| phase < *c) {
            best = Some((phase, groups[last]));
        }
        // merge `last` into `prev`
        let merged = groups[last];
        groups[prev] |= merged;
        for &v in &active {
            let add = w[last][v];
            w[prev][v] += add;
            w[v][prev] += add;
        }
        w[prev][prev] = 0;
        active.retain(|&v| v != last);
    }

    let (_, side) = best.expect("n >= 2 gives at least one phase");
    Ok(Cut::new(g, side).canonical())
}

/// Edge connectivity `λ(G)`.
pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    Ok(global_min_cut(g)?.crossing)
}

/// `min(λ(u, v), cap)` via unit-capacity BFS augmenting paths.
pub fn local_edge_connectivity(g: &Graph, u: usize, v: usize, cap: usize) -> usize {
    if u == v {
        return cap;
    }
    let n = g.n();
    // flow[a * n + b] in {-1, 0, 1}, antisymmetric
    let mut flow = vec![0i8; n * n];
    let mut found = 0;
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    while found < cap {
        parent.fill(usize::MAX);
        parent[u] = u;
        queue.clear();
        queue.push_back(u);
        'bfs: while let Some(a) = queue.pop_front() {
            for b in g.neighbors(a).iter() {
                if parent[b] == usize::MAX && flow[a * n + b] < 1 {
                    parent[b] = a;
                    if b == v {
                        break 'bfs;
                    }
                    queue.push_back(b);
                }
            }
        }
        if parent[v] == usize::MAX {
            break;
        }
        let mut b = v;
        while b != u {
            let a = parent[b];
            flow[a * n + b] += 1;
            flow[b * n + a] -= 1;
            b = a;
        }
        found += 1;
    }
    found
}

/// Whether every `u`–`v` cut has more than `k` edges.
pub fn pairwise_k_connected(g: &Graph, u: usize, v: usize, k: usize) -> bool {
    local_edge_connectivity(g, u, v, k + 1) > k
}

/// Classes of the equivalence relation `λ(u, v) > k`, by smallest member.
pub fn k_connected_classes(g: &Graph, k: usize) -> Vec<VertexSet> {
    let mut classes: Vec<VertexSet> = Vec::new();
    // vertices in different components are never k-connected
    for comp in connected_components(g) {
        let first = classes.len();
        for v in comp.iter() {
            let home = classes[first..]
                .iter()
                .position(|c| pairwise_k_connected(g, c.first().unwrap(), v, k));
            match home {
                Some(i) => {
                    classes[first + i].insert(v);
                }
                None => classes.push(VertexSet::singleton(v)),
            }
        }
    }
    classes.sort_by_key(|c| c.first());
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::fixtures;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn highly_connected_examples() {
        let k4 = Graph::complete(4);
        assert!(is_highly_connected(&k4, &k4.vertices()).unwrap());
        let c5 = Graph::cycle(5);
        assert!(!is_highly_connected(&c5, &c5.vertices()).unwrap());
        let k2 = Graph::complete(2);
        assert!(!is_highly_connected(&k2, &k2.vertices()).unwrap());
        let loose = Convention { k2_is_hc: true };
        assert!(is_highly_connected_with(&k2, &k2.vertices(), loose).unwrap());
        assert!(is_highly_connected(&c5, &set(&[3])).unwrap());
        assert_eq!(
            is_highly_connected(&k4, &VertexSet::new()),
            Err(Error::EmptyVertexSet)
        );
    }

    #[test]
    fn min_cut_examples() {
        assert_eq!(edge_connectivity(&Graph::complete(4)).unwrap(), 3);
        assert_eq!(edge_connectivity(&Graph::path(4)).unwrap(), 1);
        let cut = global_min_cut(&fixtures::two_k4_bridge()).unwrap();
        assert_eq!(cut.crossing, 1);
        assert_eq!(cut.side1, set(&[0, 1, 2, 3]));
        assert_eq!(cut.side2, set(&[4, 5, 6, 7]));
        assert_eq!(
            edge_connectivity(&Graph::complete(1)),
            Err(Error::TooFewVertices { n: 1, min: 2 })
        );
    }

    #[test]
    fn disconnected_min_cut_is_zero() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(3)).unwrap();
        let cut = global_min_cut(&g).unwrap();
        assert_eq!(cut.crossing, 0);
        assert!(cut.side1.contains(0));
    }

    #[test]
    fn pairwise_examples() {
        assert!(pairwise_k_connected(&Graph::complete(4), 0, 1, 2));
        assert!(!pairwise_k_connected(&Graph::path(4), 0, 3, 1));
        assert!(!pairwise_k_connected(&fixtures::two_k4_bridge(), 0, 4, 1));
        assert_eq!(local_edge_connectivity(&fixtures::two_k4_bridge(), 0, 4, 9), 1);
    }

    #[test]
    fn class_examples() {
        let classes = k_connected_classes(&fixtures::two_k4_bridge(), 1);
        assert_eq!(classes, vec![set(&[0, 1, 2, 3]), set(&[4, 5, 6, 7])]);
        assert_eq!(k_connected_classes(&Graph::complete(4), 2).len(), 1);
        assert_eq!(k_connected_classes(&Graph::path(4), 1).len(), 4);
    }

    #[test]
    fn component_examples() {
        let g = Graph::complete(4).disjoint_union(&Graph::complete(3)).unwrap();
        let sizes: Vec<usize> = connected_components(&g).iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![4, 3]);
        assert_eq!(connected_components(&Graph::complete(4)).len(), 1);
        assert_eq!(connected_components(&Graph::new(3).unwrap()).len(), 3);
    }
}
