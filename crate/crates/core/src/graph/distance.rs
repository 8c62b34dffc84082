use std::collections::VecDeque;

use super::Graph;

/// All-pairs hop distances; `None` for vertices in different components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distances {
    n: usize,
    dist: Vec<Option<usize>>,
}

impl Distances {
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.dist[u * self.n + v]
    }
}

fn bfs(g: &Graph, source: usize, dist: &mut [Option<usize>], parent: &mut [usize]) {
    dist.fill(None);
    dist[source] = Some(0);
    parent[source] = source;
    let mut queue = VecDeque::from([source]);
    while let Some(a) = queue.pop_front() {
        let d = dist[a].unwrap();
        for b in g.neighbors(a).iter() {
            if dist[b].is_none() {
                dist[b] = Some(d + 1);
                parent[b] = a;
                queue.push_back(b);
            }
        }
    }
}

pub fn distances(g: &Graph) -> Distances {
    let n = g.n();
    let mut dist = vec![None; n * n];
    let mut parent = vec![0; n];
    for u in 0..n {
        bfs(g, u, &mut dist[u * n..(u + 1) * n], &mut parent);
    }
    Distances { n, dist }
}

/// Largest distance, or `None` (infinite) when the graph is disconnected.
pub fn diameter(g: &Graph) -> Option<usize> {
    let d = distances(g);
    let mut best = 0;
    for u in 0..g.n() {
        for v in 0..g.n() {
            best = best.max(d.get(u, v)?);
        }
    }
    Some(best)
}

/// A shortest path `(u, x, y, v)` between some pair at distance exactly 3.
///
/// Returns `None` iff every component has diameter at most 2. The first
/// source `u` in index order and the smallest `v` at distance 3 are used.
pub fn find_distance3_path(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    let mut dist = vec![None; n];
    let mut parent = vec![0; n];
    for u in 0..n {
        bfs(g, u, &mut dist, &mut parent);
        if let Some(v) = (0..n).find(|&v| dist[v] == Some(3)) {
            let y = parent[v];
            let x = parent[y];
            return Some([u, x, y, v]);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_has_distance3_witness() {
        let p4 = Graph::path(4);
        assert_eq!(diameter(&p4), Some(3));
        assert_eq!(find_distance3_path(&p4), Some([0, 1, 2, 3]));
    }

    #[test]
    fn small_diameters() {
        assert_eq!(diameter(&Graph::complete(4)), Some(1));
        assert_eq!(find_distance3_path(&Graph::complete(4)), None);
        assert_eq!(diameter(&Graph::cycle(5)), Some(2));
        assert_eq!(find_distance3_path(&Graph::cycle(5)), None);
    }

    #[test]
    fn disconnected_is_infinite() {
        let g = Graph::path(2).disjoint_union(&Graph::path(4)).unwrap();
        assert_eq!(diameter(&g), None);
        assert_eq!(distances(&g).get(0, 2), None);
        assert_eq!(find_distance3_path(&g), Some([2, 3, 4, 5]));
    }

    #[test]
    fn long_path_gives_prefix() {
        let p = Graph::path(7);
        let [u, x, y, v] = find_distance3_path(&p).unwrap();
        assert!(p.has_edge(u, x) && p.has_edge(x, y) && p.has_edge(y, v));
        assert_eq!(distances(&p).get(u, v), Some(3));
    }
}
