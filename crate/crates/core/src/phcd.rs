//! p-Highly Connected Deletion: at most `k` deletions leaving at most `p`
//! highly connected components.
//!
//! For a connected graph every cluster boundary built up so far is a k-cut,
//! so the search walks a layered digraph whose nodes are
//! `(placed side of a k-cut, clusters used, deletions used)` and whose arcs
//! add one highly connected cluster. Components are combined by a second
//! reachability pass over `(component, clusters, deletions)`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::context::Context;
use crate::error::{Error, Result};
use crate::graph::{connected_components, hc_unchecked, Cut, Graph, Partition, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhcdInstance {
    pub graph: Graph,
    pub p: usize,
    pub k: usize,
}

impl PhcdInstance {
    pub fn new(graph: Graph, p: usize, k: usize) -> Self {
        PhcdInstance { graph, p, k }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhcdSolution {
    pub partition: Partition,
    pub deleted_edges: Vec<(usize, usize)>,
}

/// Visits every bipartition with vertex 0 on `side1` and at most `k`
/// crossing edges, including the trivial cut `(V, ∅)`. Vertices are
/// assigned in BFS order and a branch is cut as soon as its partial crossing
/// count exceeds `k`. Returns the number of cuts, or
/// [`Error::CapExceeded`] once more than `cap` have been found.
pub fn enumerate_k_cuts(
    g: &Graph,
    k: usize,
    cap: Option<u64>,
    mut visit: impl FnMut(Cut),
) -> Result<u64> {
    if g.n() == 0 {
        return Ok(0);
    }
    let order = bfs_order(g);
    let mut count = 0u64;
    let mut stack = vec![(1usize, VertexSet::singleton(order[0]), VertexSet::new(), 0usize)];
    while let Some((i, a, b, crossing)) = stack.pop() {
        if i == order.len() {
            count += 1;
            if cap.is_some_and(|c| count > c) {
                return Err(Error::CapExceeded(cap.unwrap()));
            }
            visit(Cut {
                side1: a,
                side2: b,
                crossing,
            });
            continue;
        }
        let v = order[i];
        let to_b = crossing + g.degree_in(v, &a);
        if to_b <= k {
            stack.push((i + 1, a, b.with(v), to_b));
        }
        let to_a = crossing + g.degree_in(v, &b);
        if to_a <= k {
            stack.push((i + 1, a.with(v), b, to_a));
        }
    }
    Ok(count)
}

/// All canonical k-cuts, collected.
pub fn k_cuts(g: &Graph, k: usize, cap: Option<u64>) -> Result<Vec<Cut>> {
    let mut out = Vec::new();
    enumerate_k_cuts(g, k, cap, |c| out.push(c))?;
    Ok(out)
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = VertexSet::new();
    let mut order = Vec::with_capacity(g.n());
    for root in 0..g.n() {
        if seen.contains(root) {
            continue;
        }
        seen.insert(root);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in (g.neighbors(v) - seen).iter() {
                seen.insert(w);
                queue.push_back(w);
            }
        }
    }
    order
}

/// Every reachable `(clusters, deletions)` end state of a connected graph,
/// each with one cluster sequence realising it.
type Endings = BTreeMap<(usize, usize), Vec<VertexSet>>;

fn connected_endings(g: &Graph, p: usize, k: usize, ctx: &Context) -> Result<Option<Endings>> {
    let mut sides: Vec<VertexSet> = Vec::new();
    let counted = enumerate_k_cuts(g, k, ctx.cut_cap, |c| {
        sides.push(c.side1);
        sides.push(c.side2);
    });
    match counted {
        Ok(n) => ctx.stats.add_cuts(n),
        Err(Error::CapExceeded(_)) => return Ok(None),
        Err(e) => return Err(e),
    }
    sides.sort_by_key(|s| (s.len(), *s));
    sides.dedup();
    let index: HashMap<VertexSet, usize> = sides.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let full = g.vertices();
    let cut: Vec<usize> = sides.iter().map(|s| g.cut_size(s)).collect();

    type State = (usize, usize, usize);
    let start: State = (index[&VertexSet::new()], 0, 0);
    let mut parent: HashMap<State, Option<(State, VertexSet)>> = HashMap::from([(start, None)]);
    let mut hc_memo: HashMap<VertexSet, bool> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    let mut endings = Endings::new();
    while let Some(state @ (i, j, l)) = queue.pop_front() {
        let placed = sides[i];
        if placed == full {
            let mut clusters = Vec::new();
            let mut cur = state;
            while let Some(Some((prev, x))) = parent.get(&cur) {
                clusters.push(*x);
                cur = *prev;
            }
            clusters.reverse();
            endings.entry((j, l)).or_insert(clusters);
            continue;
        }
        if j == p {
            continue;
        }
        ctx.stats.add_branch_nodes(1);
        for (t, next) in sides.iter().enumerate().skip(i + 1) {
            if !placed.is_subset(next) || placed == *next {
                continue;
            }
            let x = *next - placed;
            let l2 = l + g.edges_between(&placed, &x);
            // edges leaving `next` are deleted later in any completion
            if l2 + cut[t] > k {
                continue;
            }
            let hc = *hc_memo
                .entry(x)
                .or_insert_with(|| hc_unchecked(g, &x, ctx.convention));
            let succ = (t, j + 1, l2);
            if hc && !parent.contains_key(&succ) {
                parent.insert(succ, Some((state, x)));
                queue.push_back(succ);
            }
        }
    }
    Ok(Some(endings))
}

/// Decides a connected instance; the certificate is the sequence of added
/// clusters.
pub fn solve_connected_phcd(g: &Graph, p: usize, k: usize, ctx: &Context) -> Result<Option<Vec<VertexSet>>> {
    Ok(connected_endings(g, p, k, ctx)?.and_then(|e| e.into_values().next()))
}

pub fn solve_phcd(inst: &PhcdInstance, ctx: &Context) -> Result<Option<PhcdSolution>> {
    let g = &inst.graph;
    let (p, k) = (inst.p, inst.k);
    // (clusters, deletions) -> blocks so far, in graph labels
    let mut layer: BTreeMap<(usize, usize), Vec<VertexSet>> = BTreeMap::from([((0, 0), Vec::new())]);
    for comp in connected_components(g) {
        let (sub, labels) = g.induced(&comp);
        let Some(endings) = connected_endings(&sub, p, k, ctx)? else {
            return Ok(None);
        };
        let mut next = BTreeMap::new();
        for ((a, b), blocks) in &layer {
            for ((j, l), clusters) in &endings {
                let key = (a + j, b + l);
                if key.0 <= p && key.1 <= k {
                    next.entry(key).or_insert_with(|| {
                        let mut all = blocks.clone();
                        all.extend(clusters.iter().map(|c| crate::graph::map_set(c, &labels)));
                        all
                    });
                }
            }
        }
        if next.is_empty() {
            return Ok(None);
        }
        layer = next;
    }
    let blocks = layer.into_values().next().expect("nonempty layer");
    let partition = Partition::new(blocks);
    Ok(Some(PhcdSolution {
        deleted_edges: partition.inter_block_edges(g),
        partition,
    }))
}

/// Whether `sol` is a valid certificate for `inst`.
pub fn verify_phcd_solution(inst: &PhcdInstance, sol: &PhcdSolution, ctx: &Context) -> bool {
    let g = &inst.graph;
    let p = &sol.partition;
    p.covers_exactly(&g.vertices())
        && p.len() <= inst.p
        && p.blocks().iter().all(|b| hc_unchecked(g, b, ctx.convention))
        && sol.deleted_edges == p.inter_block_edges(g)
        && sol.deleted_edges.len() <= inst.k
}
