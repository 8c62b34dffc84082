use crate::graph::{Graph, VertexSet};

/// Visits every connected vertex set `B` with `v ∈ B`, `|B| = size`,
/// `B ∩ forbidden = ∅` and at most `max_boundary` vertices in `N(B)`,
/// exactly once. `visit` returns `false` to stop early. Returns the number
/// of sets visited.
///
/// Each frontier vertex is either added or excluded for good; excluded
/// vertices stay on the boundary, which bounds the search tree.
pub fn enumerate_connected_sets(
    g: &Graph,
    v: usize,
    size: usize,
    max_boundary: usize,
    forbidden: &VertexSet,
    mut visit: impl FnMut(VertexSet) -> bool,
) -> usize {
    if size == 0 || v >= g.n() || forbidden.contains(v) {
        return 0;
    }
    let mut count = 0;
    let mut stack = vec![(VertexSet::singleton(v), VertexSet::new(), g.neighbors(v))];
    while let Some((b, excluded, nb)) = stack.pop() {
        let outside = nb & (excluded | *forbidden);
        if outside.len() > max_boundary {
            continue;
        }
        if b.len() == size {
            if nb.len() <= max_boundary {
                count += 1;
                if !visit(b) {
                    return count;
                }
            }
            continue;
        }
        let Some(x) = (nb - excluded - *forbidden).first() else {
            continue;
        };
        stack.push((b, excluded.with(x), nb));
        stack.push((b.with(x), excluded, (nb | g.neighbors(x)) - b.with(x)));
    }
    count
}
