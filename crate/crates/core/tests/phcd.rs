mod common;

use std::collections::HashSet;

use common::{random_graphs, rng};
use hcc_core::io::{fixtures, generate_planted, PlantedSpec};
use hcc_core::oracle::{brute_cuts, brute_phcd};
use hcc_core::phcd::{k_cuts, solve_phcd, verify_phcd_solution, PhcdInstance};
use hcc_core::{Context, Convention, Graph};
use rand::Rng;

fn decide(g: &Graph, p: usize, k: usize, ctx: &Context) -> bool {
    let inst = PhcdInstance::new(g.clone(), p, k);
    let sol = solve_phcd(&inst, ctx).unwrap();
    if let Some(s) = &sol {
        assert!(verify_phcd_solution(&inst, s, ctx));
    }
    sol.is_some()
}

#[test]
fn cuts_match_brute_force() {
    let mut r = rng(21);
    for g in random_graphs(22, 120, 1, 11) {
        let k = r.gen_range(0..=5);
        let got = k_cuts(&g, k, None).unwrap();
        let seen: HashSet<_> = got.iter().map(|c| c.side1).collect();
        assert_eq!(seen.len(), got.len());
        let want: HashSet<_> = brute_cuts(&g, k).unwrap().iter().map(|c| c.side1).collect();
        assert_eq!(seen, want);
        for c in &got {
            assert!(c.side1.contains(0));
            assert_eq!(c.crossing, g.cut_size(&c.side1));
        }
    }
}

#[test]
fn solver_matches_oracle_and_is_monotone() {
    let ctx = Context::default();
    let mut r = rng(23);
    for g in random_graphs(24, 150, 1, 8) {
        let p = r.gen_range(1..=3);
        let k = r.gen_range(0..=6);
        let yes = decide(&g, p, k, &ctx);
        assert_eq!(yes, brute_phcd(&g, p, k, Convention::default()).unwrap(), "{g:?} p={p} k={k}");
        if yes {
            assert!(decide(&g, p + 1, k, &ctx));
            assert!(decide(&g, p, k + 1, &ctx));
        }
    }
}

#[test]
fn fixtures_match_oracle() {
    let ctx = Context::default();
    for (name, g) in fixtures::fixtures() {
        if g.n() > 10 {
            continue;
        }
        for p in 1..=3 {
            for k in 0..=4 {
                let want = brute_phcd(&g, p, k, Convention::default()).unwrap();
                assert_eq!(decide(&g, p, k, &ctx), want, "{name} p={p} k={k}");
            }
        }
    }
}

#[test]
fn planted_clusters_are_found() {
    let ctx = Context::default();
    for seed in 0..5 {
        let inst = generate_planted(&PlantedSpec::new(vec![5, 5, 5], 2, seed)).unwrap();
        assert!(decide(&inst.graph, 3, 2, &ctx));
        assert!(!decide(&inst.graph, 1, 2, &ctx));
    }
}
