//! Min-plus subset convolution over small universes, plus the cluster
//! set-functions derived from a graph.
//!
//! Subsets of a universe of size `u` are `u32` bitmasks over local indices
//! `0..u`. A [`SetFunction`] stores one value per mask; values are bounded by
//! `M` and infinity is stored as the sentinel `2M + 1`.

use crate::context::{Context, Convention};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest universe a table may be built over (`2^26` entries).
pub const MAX_UNIVERSE: usize = 26;

/// Memory ceiling for the ranked backend, in `u32` words.
const RANKED_WORD_LIMIT: u64 = 1 << 28;

#[derive(Clone, PartialEq, Eq)]
pub struct SetFunction {
    universe: usize,
    bound: u32,
    values: Vec<u32>,
}

impl std::fmt::Debug for SetFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SetFunction(u={}, M={})", self.universe, self.bound)
    }
}

impl SetFunction {
    /// Builds a table from `value(mask)`; `None` means infinity.
    pub fn from_fn(
        universe: usize,
        bound: u32,
        mut value: impl FnMut(u32) -> Option<u32>,
    ) -> Result<Self> {
        check_universe(universe)?;
        let inf = sentinel(bound)?;
        let mut values = Vec::with_capacity(1 << universe);
        for mask in 0..1u32 << universe {
            values.push(match value(mask) {
                Some(v) if v > bound => return Err(Error::BoundOverflow),
                Some(v) => v,
                None => inf,
            });
        }
        Ok(SetFunction {
            universe,
            bound,
            values,
        })
    }

    /// The identity of `∗`: 0 on the empty set, infinity elsewhere.
    pub fn identity(universe: usize) -> Result<Self> {
        SetFunction::from_fn(universe, 0, |m| (m == 0).then_some(0))
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    #[inline]
    pub fn infinity(&self) -> u32 {
        2 * self.bound + 1
    }

    #[inline]
    pub fn get(&self, mask: u32) -> Option<u32> {
        let v = self.values[mask as usize];
        (v <= self.bound).then_some(v)
    }

    pub fn full_mask(&self) -> u32 {
        full_mask(self.universe)
    }

    /// Number of finite entries.
    pub fn support_len(&self) -> usize {
        self.values.iter().filter(|&&v| v <= self.bound).count()
    }

    /// Same function with every value above `cap` turned into infinity.
    pub fn clamp(&self, cap: u32) -> SetFunction {
        if cap >= self.bound {
            return self.clone();
        }
        let inf = 2 * cap + 1;
        SetFunction {
            universe: self.universe,
            bound: cap,
            values: self
                .values
                .iter()
                .map(|&v| if v <= cap { v } else { inf })
                .collect(),
        }
    }

    fn finite(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(move |(_, &v)| v <= self.bound)
            .map(|(m, &v)| (m as u32, v))
    }
}

fn check_universe(universe: usize) -> Result<()> {
    if universe > MAX_UNIVERSE {
        Err(Error::TableTooLarge(universe))
    } else {
        Ok(())
    }
}

fn sentinel(bound: u32) -> Result<u32> {
    bound
        .checked_mul(2)
        .and_then(|b| b.checked_add(1))
        .ok_or(Error::BoundOverflow)
}

#[inline]
fn full_mask(universe: usize) -> u32 {
    if universe == 32 {
        u32::MAX
    } else {
        (1u32 << universe) - 1
    }
}

/// Convolution backend.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Backend {
    /// Naive up to 16 elements, otherwise whichever is estimated cheaper.
    #[default]
    Auto,
    Naive,
    Ranked,
}

/// `(f ∗ g)(S) = min_{T ⊆ S} f(T) + g(S ∖ T)` with the automatic backend.
pub fn min_plus_convolve(f: &SetFunction, g: &SetFunction) -> Result<SetFunction> {
    min_plus_convolve_with(f, g, Backend::Auto)
}

pub fn min_plus_convolve_with(
    f: &SetFunction,
    g: &SetFunction,
    backend: Backend,
) -> Result<SetFunction> {
    if f.universe != g.universe {
        return Err(Error::UniverseMismatch);
    }
    let bound = f.bound.checked_add(g.bound).ok_or(Error::BoundOverflow)?;
    sentinel(bound)?;
    match resolve(backend, f, g) {
        Backend::Ranked => ranked(f, g, bound),
        _ => Ok(naive(f, g, bound)),
    }
}

fn ranked_words(f: &SetFunction, g: &SetFunction) -> u64 {
    let u = f.universe as u64;
    let size = 1u64 << u;
    let (df, dg) = (f.bound as u64 + 1, g.bound as u64 + 1);
    (u + 1) * size * (df + dg) + size * (df + dg - 1)
}

fn resolve(backend: Backend, f: &SetFunction, g: &SetFunction) -> Backend {
    match backend {
        Backend::Auto if f.universe <= 16 => Backend::Naive,
        Backend::Auto => {
            if ranked_words(f, g) > RANKED_WORD_LIMIT {
                return Backend::Naive;
            }
            let u = f.universe as u64;
            let size = 1u64 << u;
            let small = f.support_len().min(g.support_len()) as u64;
            let naive_cost = small * size;
            let ranked_cost = size * (u + 1) * (u + 2) / 2 * (f.bound as u64 + 1) * (g.bound as u64 + 1);
            if ranked_cost < naive_cost {
                Backend::Ranked
            } else {
                Backend::Naive
            }
        }
        b => b,
    }
}

/// Enumerates the finite support of the sparser operand and, for each such
/// `T`, every subset of the complement.
fn naive(f: &SetFunction, g: &SetFunction, bound: u32) -> SetFunction {
    let (a, b) = if f.support_len() <= g.support_len() {
        (f, g)
    } else {
        (g, f)
    };
    let full = f.full_mask();
    let inf = 2 * bound + 1;
    let mut out = vec![inf; 1 << f.universe];
    for (t, vt) in a.finite() {
        let rest = full & !t;
        let mut r = rest;
        loop {
            if let Some(vr) = b.get(r) {
                let slot = &mut out[(t | r) as usize];
                *slot = (*slot).min(vt + vr);
            }
            if r == 0 {
                break;
            }
            r = (r - 1) & rest;
        }
    }
    SetFunction {
        universe: f.universe,
        bound,
        values: out,
    }
}

/// Ranked zeta/Möbius transform over polynomials in a formal variable whose
/// exponent carries the value. Counts wrap modulo `2^32`; the true
/// coefficients are below `2^u`, so nonzero tests stay exact.
fn ranked(f: &SetFunction, g: &SetFunction, bound: u32) -> Result<SetFunction> {
    let u = f.universe;
    let size = 1usize << u;
    if ranked_words(f, g) > RANKED_WORD_LIMIT {
        return Err(Error::TableTooLarge(u));
    }
    let fhat = ranked_zeta(f);
    let ghat = ranked_zeta(g);
    let (df, dg) = (f.bound as usize + 1, g.bound as usize + 1);
    let dp = bound as usize + 1;

    let inf = 2 * bound + 1;
    let mut out = vec![inf; size];
    let mut prod = vec![0u32; size * dp];
    for r in 0..=u {
        prod.fill(0);
        for x in 0..size {
            let dst = &mut prod[x * dp..(x + 1) * dp];
            for i in 0..=r {
                let a = &fhat[(i * size + x) * df..(i * size + x + 1) * df];
                let b = &ghat[((r - i) * size + x) * dg..((r - i) * size + x + 1) * dg];
                for (da, &ca) in a.iter().enumerate() {
                    if ca == 0 {
                        continue;
                    }
                    for (db, &cb) in b.iter().enumerate() {
                        dst[da + db] = dst[da + db].wrapping_add(ca.wrapping_mul(cb));
                    }
                }
            }
        }
        for bit in 0..u {
            let step = 1usize << bit;
            for x in 0..size {
                if x & step != 0 {
                    let (lo, hi) = prod.split_at_mut(x * dp);
                    let src = &lo[(x - step) * dp..(x - step + 1) * dp];
                    for (d, s) in hi[..dp].iter_mut().zip(src) {
                        *d = d.wrapping_sub(*s);
                    }
                }
            }
        }
        for (x, slot) in out.iter_mut().enumerate() {
            if (x as u32).count_ones() as usize == r {
                let coeffs = &prod[x * dp..(x + 1) * dp];
                if let Some(d) = coeffs.iter().position(|&c| c != 0) {
                    *slot = d as u32;
                }
            }
        }
    }
    Ok(SetFunction {
        universe: u,
        bound,
        values: out,
    })
}

/// Layout: `[(rank * 2^u + mask) * (M + 1) + value]`.
fn ranked_zeta(f: &SetFunction) -> Vec<u32> {
    let u = f.universe;
    let size = 1usize << u;
    let d = f.bound as usize + 1;
    let mut t = vec![0u32; (u + 1) * size * d];
    for (m, v) in f.finite() {
        let rank = m.count_ones() as usize;
        t[(rank * size + m as usize) * d + v as usize] += 1;
    }
    for rank in 0..=u {
        let layer = &mut t[rank * size * d..(rank + 1) * size * d];
        for bit in 0..u {
            let step = 1usize << bit;
            for x in 0..size {
                if x & step != 0 {
                    let (lo, hi) = layer.split_at_mut(x * d);
                    let src = &lo[(x - step) * d..(x - step + 1) * d];
                    for (a, b) in hi[..d].iter_mut().zip(src) {
                        *a = a.wrapping_add(*b);
                    }
                }
            }
        }
    }
    t
}

/// `(f ∗ g)(mask)` for a single mask in `O(2^|mask|)`.
pub fn convolve_at(f: &SetFunction, g: &SetFunction, mask: u32) -> Option<u32> {
    let mut best: Option<u32> = None;
    let mut t = mask;
    loop {
        if let (Some(a), Some(b)) = (f.get(t), g.get(mask & !t)) {
            best = Some(best.map_or(a + b, |x| x.min(a + b)));
        }
        if t == 0 {
            break;
        }
        t = (t - 1) & mask;
    }
    best
}

/// Minimum over partitions into nonempty blocks of the summed `f`, obtained
/// by iterating `h ← min(h, h ∗ f)` to a fixpoint. Values above `cap` are
/// treated as infinite.
pub fn min_plus_closure(f: &SetFunction, cap: u32, ctx: &Context) -> Result<SetFunction> {
    if f.get(0) != Some(0) {
        return Err(Error::NonZeroOnEmpty);
    }
    let f = f.clamp(cap);
    let mut h = f.clone();
    for _ in 0..f.universe.max(1) {
        ctx.stats.add_convolutions(1);
        let next = min_plus_convolve_with(&h, &f, ctx.backend)?.clamp(cap);
        let merged = SetFunction::from_fn(f.universe, cap, |m| match (h.get(m), next.get(m)) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        })?;
        if merged == h {
            break;
        }
        h = merged;
    }
    Ok(h)
}

/// Splits `mask` into blocks realising `h(mask)`, peeling off at each step a
/// block that contains the lowest remaining element.
pub fn recover_partition(f: &SetFunction, h: &SetFunction, mask: u32) -> Result<Vec<u32>> {
    let mut rest = mask;
    let mut blocks = Vec::new();
    while rest != 0 {
        let target = h.get(rest).ok_or(Error::NoPartition)?;
        let low = rest & rest.wrapping_neg();
        let others = rest & !low;
        let mut sub = others;
        let block = loop {
            let b = sub | low;
            if let (Some(fb), Some(hr)) = (f.get(b), h.get(rest & !b)) {
                if fb + hr == target {
                    break Some(b);
                }
            }
            if sub == 0 {
                break None;
            }
            sub = (sub - 1) & others;
        };
        let b = block.ok_or(Error::NoPartition)?;
        blocks.push(b);
        rest &= !b;
    }
    Ok(blocks)
}

/// Local adjacency of `G[universe]` as bitmasks, with the vertex labels.
pub(crate) fn local_adjacency(g: &Graph, universe: &VertexSet) -> Result<(Vec<u32>, Vec<usize>)> {
    g.check_subset(universe)?;
    let labels = universe.to_vec();
    check_universe(labels.len())?;
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in labels.iter().enumerate() {
        index[v] = i;
    }
    let adj = labels
        .iter()
        .map(|&v| {
            (g.neighbors(v) & *universe)
                .iter()
                .fold(0u32, |acc, w| acc | 1 << index[w])
        })
        .collect();
    Ok((adj, labels))
}

/// Degree test on a local mask; mirrors `is_highly_connected_with`.
#[inline]
pub(crate) fn mask_is_hc(adj: &[u32], mask: u32, conv: Convention) -> bool {
    let size = mask.count_ones();
    match size {
        0 => false,
        1 => true,
        2 => conv.k2_is_hc && {
            let v = mask.trailing_zeros() as usize;
            adj[v] & mask != 0
        },
        _ => {
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                if 2 * (adj[v] & mask).count_ones() <= size {
                    return false;
                }
                rest &= rest - 1;
            }
            true
        }
    }
}

/// Number of edges between `a` and `b` (disjoint local masks).
#[inline]
pub(crate) fn mask_edges_between(adj: &[u32], a: u32, b: u32) -> u32 {
    let mut rest = a;
    let mut total = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        total += (adj[v] & b).count_ones();
        rest &= rest - 1;
    }
    total
}

/// `f(S) = |E(S, universe ∖ S)|` when `G[S]` is highly connected, infinity
/// otherwise, and `f(∅) = 0`. Returns the table and the local-to-graph labels.
pub fn build_cluster_function(
    g: &Graph,
    universe: &VertexSet,
    conv: Convention,
) -> Result<(SetFunction, Vec<usize>)> {
    let (adj, labels) = local_adjacency(g, universe)?;
    let full = full_mask(labels.len());
    let bound = g.edges_within(universe) as u32;
    let f = SetFunction::from_fn(labels.len(), bound, |m| {
        if m == 0 {
            Some(0)
        } else if mask_is_hc(&adj, m, conv) {
            Some(mask_edges_between(&adj, m, full & !m))
        } else {
            None
        }
    })?;
    Ok((f, labels))
}

/// Converts a local mask back to graph vertices.
pub fn mask_to_set(mask: u32, labels: &[usize]) -> VertexSet {
    let mut s = VertexSet::new();
    let mut rest = mask;
    while rest != 0 {
        s.insert(labels[rest.trailing_zeros() as usize]);
        rest &= rest - 1;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::fixtures;

    fn example() -> SetFunction {
        let vals = [Some(0), Some(1), Some(2), Some(5)];
        SetFunction::from_fn(2, 5, |m| vals[m as usize]).unwrap()
    }

    #[test]
    fn small_convolution_examples() {
        let f = example();
        for backend in [Backend::Naive, Backend::Ranked] {
            let ff = min_plus_convolve_with(&f, &f, backend).unwrap();
            assert_eq!(ff.get(0b11), Some(3));
            assert_eq!(ff.get(0), Some(0));
            assert_eq!(ff.get(0b01), Some(1));
            assert_eq!(convolve_at(&f, &f, 0b11), Some(3));
        }
    }

    #[test]
    fn identity_is_neutral() {
        let f = example();
        let e = SetFunction::identity(2).unwrap();
        let fe = min_plus_convolve(&f, &e).unwrap();
        for m in 0..4 {
            assert_eq!(fe.get(m), f.get(m));
        }
    }

    #[test]
    fn rejects_mismatch_and_overflow() {
        let a = SetFunction::identity(2).unwrap();
        let b = SetFunction::identity(3).unwrap();
        assert_eq!(min_plus_convolve(&a, &b), Err(Error::UniverseMismatch));
        assert_eq!(
            SetFunction::from_fn(1, 3, |_| Some(4)),
            Err(Error::BoundOverflow)
        );
        assert_eq!(
            SetFunction::identity(MAX_UNIVERSE + 1),
            Err(Error::TableTooLarge(MAX_UNIVERSE + 1))
        );
    }

    #[test]
    fn cluster_function_examples() {
        let conv = Convention::default();
        let g = fixtures::two_k4_bridge();
        let (f, _) = build_cluster_function(&g, &g.vertices(), conv).unwrap();
        assert_eq!(f.get(0b1111), Some(1));
        assert_eq!(f.get(0b11), None);
        let k4 = Graph::complete(4);
        let (f4, _) = build_cluster_function(&k4, &k4.vertices(), conv).unwrap();
        assert_eq!(f4.get(0b1111), Some(0));
    }

    #[test]
    fn closure_and_recovery() {
        let ctx = Context::default();
        let g = fixtures::two_k4_bridge();
        let (f, labels) = build_cluster_function(&g, &g.vertices(), ctx.convention).unwrap();
        let h = min_plus_closure(&f, 2 * g.m() as u32, &ctx).unwrap();
        assert_eq!(h.get(f.full_mask()), Some(2));
        assert_eq!(h.get(0), Some(0));
        let blocks: Vec<VertexSet> = recover_partition(&f, &h, f.full_mask())
            .unwrap()
            .into_iter()
            .map(|b| mask_to_set(b, &labels))
            .collect();
        assert_eq!(blocks, vec![(0..4).collect(), (4..8).collect()]);

        let p4 = Graph::path(4);
        let (f, _) = build_cluster_function(&p4, &p4.vertices(), ctx.convention).unwrap();
        let h = min_plus_closure(&f, 6, &ctx).unwrap();
        assert_eq!(h.get(0b1111), Some(6));
        assert_eq!(recover_partition(&f, &h, 0b1111).unwrap().len(), 4);
    }

    #[test]
    fn closure_requires_zero_on_empty() {
        let f = SetFunction::from_fn(1, 2, |_| Some(1)).unwrap();
        assert_eq!(
            min_plus_closure(&f, 4, &Context::default()),
            Err(Error::NonZeroOnEmpty)
        );
    }
}
