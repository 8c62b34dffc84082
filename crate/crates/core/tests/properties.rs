use hcc_core::graph::{
    connected_components, edge_connectivity, is_highly_connected, k_connected_classes,
};
use hcc_core::io::{parse_graph, serialize_graph};
use hcc_core::subset_conv::{min_plus_convolve_with, Backend, SetFunction};
use hcc_core::{Graph, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Table of `2^u` entries, each finite in `0..=bound` or infinite.
fn set_function(u: usize, bound: u32) -> impl Strategy<Value = SetFunction> {
    prop::collection::vec(prop::option::weighted(0.7, 0..=bound), 1 << u).prop_map(move |vals| {
        SetFunction::from_fn(u, bound, |m| vals[m as usize]).unwrap()
    })
}

fn plain(f: &SetFunction, g: &SetFunction) -> Vec<Option<u32>> {
    (0..=f.full_mask())
        .map(|s| {
            (0..=s)
                .filter(|t| t & !s == 0)
                .filter_map(|t| Some(f.get(t)? + g.get(s & !t)?))
                .min()
        })
        .collect()
}

fn values(f: &SetFunction) -> Vec<Option<u32>> {
    (0..=f.full_mask()).map(|m| f.get(m)).collect()
}

fn pair(max_u: usize) -> impl Strategy<Value = (SetFunction, SetFunction)> {
    (0..=max_u, 1..=50u32).prop_flat_map(|(u, b)| (set_function(u, b), set_function(u, b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn backends_match_plain_loop((f, g) in pair(9)) {
        let want = plain(&f, &g);
        for backend in [Backend::Naive, Backend::Ranked, Backend::Auto] {
            let got = min_plus_convolve_with(&f, &g, backend).unwrap();
            prop_assert_eq!(values(&got), want.clone());
        }
    }

    #[test]
    fn convolution_commutes((f, g) in pair(8)) {
        let fg = min_plus_convolve_with(&f, &g, Backend::Ranked).unwrap();
        let gf = min_plus_convolve_with(&g, &f, Backend::Ranked).unwrap();
        prop_assert_eq!(values(&fg), values(&gf));
    }

    #[test]
    fn convolution_associates(
        (f, g, h) in (0..=7usize, 1..=20u32)
            .prop_flat_map(|(u, b)| (set_function(u, b), set_function(u, b), set_function(u, b)))
    ) {
        let left = min_plus_convolve_with(
            &min_plus_convolve_with(&f, &g, Backend::Naive).unwrap(), &h, Backend::Naive).unwrap();
        let right = min_plus_convolve_with(
            &f, &min_plus_convolve_with(&g, &h, Backend::Ranked).unwrap(), Backend::Ranked).unwrap();
        prop_assert_eq!(values(&left), values(&right));
    }

    #[test]
    fn identity_is_neutral(f in (0..=8usize, 1..=50u32).prop_flat_map(|(u, b)| set_function(u, b))) {
        let e = SetFunction::from_fn(f.universe_size(), f.bound(), |m| (m == 0).then_some(0)).unwrap();
        let fe = min_plus_convolve_with(&f, &e, Backend::Auto).unwrap();
        prop_assert_eq!(values(&fe), values(&f));
    }

    #[test]
    fn serialize_round_trips(g in graph(14)) {
        let text = serialize_graph(&g);
        prop_assert!(text.ends_with('\n'));
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn cut_is_symmetric(g in graph(12), mask in any::<u64>()) {
        let s = VertexSet::from_mask(mask) & g.vertices();
        prop_assert_eq!(g.cut_size(&s), g.cut_size(&(g.vertices() - s)));
    }

    #[test]
    fn degree_rule_matches_connectivity(g in graph(10)) {
        let n = g.n();
        let hc = is_highly_connected(&g, &g.vertices()).unwrap();
        if n == 1 {
            prop_assert!(hc);
        } else {
            prop_assert_eq!(hc, 2 * edge_connectivity(&g).unwrap() > n);
        }
    }

    #[test]
    fn classes_refine_components(g in graph(10), k in 0..5usize) {
        let comps = connected_components(&g);
        let classes = k_connected_classes(&g, k);
        let mut covered = VertexSet::new();
        for c in &classes {
            prop_assert!(c.is_disjoint(&covered));
            covered |= *c;
            prop_assert!(comps.iter().any(|comp| c.is_subset(comp)));
        }
        prop_assert_eq!(covered, g.vertices());
        let mut zero = k_connected_classes(&g, 0);
        let mut comps = comps;
        zero.sort_by_key(|c| c.first());
        comps.sort_by_key(|c| c.first());
        prop_assert_eq!(zero, comps);
    }
}
