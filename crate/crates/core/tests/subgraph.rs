mod common;

use common::{random_graphs, rng};
use hcc_core::io::{fixtures, generate_planted, PlantedSpec};
use hcc_core::oracle::{brute_isolated, brute_seeded};
use hcc_core::subgraph::isolated::{
    apply_rule4, apply_rule5, apply_rule6, reduce_exhaustively, Reduction, RuleOutcome,
};
use hcc_core::subgraph::{
    enumerate_connected_sets, isolated_feasible, solve_isolated, solve_seeded, verify_seeded,
    IsolatedInstance, SeededInstance,
};
use hcc_core::{Context, Convention, Graph, VertexSet};
use rand::seq::IteratorRandom;
use rand::Rng;

fn conv() -> Convention {
    Convention::default()
}

fn isolated_answer(inst: &IsolatedInstance) -> bool {
    brute_isolated(&inst.graph, &inst.charges, inst.k, inst.s, conv())
        .unwrap()
        .is_some()
}

fn random_isolated(seed: u64, count: usize) -> Vec<IsolatedInstance> {
    let mut r = rng(seed);
    random_graphs(seed + 1, count, 1, 9)
        .into_iter()
        .map(|g| {
            let n = g.n();
            IsolatedInstance {
                charges: (0..n).map(|_| r.gen_range(0..=2)).collect(),
                k: r.gen_range(0..=6),
                s: r.gen_range(1..=n),
                graph: g,
            }
        })
        .collect()
}

#[test]
fn isolated_matches_oracle() {
    let ctx = Context::default();
    for inst in random_isolated(31, 300) {
        let got = solve_isolated(&inst, &ctx).unwrap();
        assert_eq!(got.is_some(), isolated_answer(&inst), "{inst:?}");
        if let Some(set) = got {
            assert!(isolated_feasible(&inst, &set, conv()));
        }
    }
}

#[test]
fn isolated_rules_preserve_answers() {
    let mut fired = [0usize; 3];
    for inst in random_isolated(33, 300) {
        let before = isolated_answer(&inst);
        let outcomes = [apply_rule4(&inst), apply_rule5(&inst, conv()), apply_rule6(&inst)];
        for (i, outcome) in outcomes.into_iter().enumerate() {
            match outcome {
                RuleOutcome::NotApplicable => continue,
                RuleOutcome::Yes(set) => {
                    assert!(isolated_feasible(&inst, &set, conv()));
                }
                RuleOutcome::Applied(red) => {
                    assert_eq!(isolated_answer(&red.instance), before, "rule {} {inst:?}", i + 4);
                }
            }
            fired[i] += 1;
        }
        if let Reduction::Reduced(red) = reduce_exhaustively(&inst, conv()) {
            let r = &red.instance;
            if r.graph.m() > 0 {
                assert!(2 * r.k > r.s, "{inst:?}");
            }
        }
    }
    assert!(fired.iter().all(|&f| f > 20), "{fired:?}");
}

#[test]
fn seeded_matches_oracle() {
    let ctx = Context::default();
    let mut r = rng(35);
    for g in random_graphs(36, 300, 1, 9) {
        let n = g.n();
        let size = r.gen_range(1..=n);
        let seed: VertexSet = (0..n).choose_multiple(&mut r, size).into_iter().collect();
        let inst = SeededInstance {
            a: r.gen_range(0..=n - size),
            k: r.gen_range(0..=g.m().min(12)),
            seed,
            graph: g,
        };
        let got = solve_seeded(&inst, &ctx).unwrap();
        let want = brute_seeded(&inst.graph, &inst.seed, inst.a, inst.k, conv()).unwrap();
        assert_eq!(got.is_some(), want.is_some(), "{inst:?}");
        if let Some(c) = got {
            assert!(verify_seeded(&inst, &c, conv()));
        }
    }
}

#[test]
fn fixture_examples() {
    let ctx = Context::default();
    let k4 = fixtures::k4_pendant();
    let found = solve_isolated(&IsolatedInstance::plain(k4, 1, 4), &ctx).unwrap();
    assert_eq!(found, Some(VertexSet::full(4)));
    let bridge = fixtures::two_k4_bridge();
    assert!(solve_isolated(&IsolatedInstance::plain(bridge.clone(), 0, 4), &ctx)
        .unwrap()
        .is_none());
    assert!(solve_isolated(&IsolatedInstance::plain(bridge, 1, 4), &ctx)
        .unwrap()
        .is_some());
    let nine = fixtures::k9_pendant();
    let seeded = SeededInstance {
        graph: nine,
        seed: VertexSet::singleton(0),
        a: 8,
        k: 1,
    };
    assert_eq!(solve_seeded(&seeded, &ctx).unwrap(), Some(VertexSet::full(9)));
}

#[test]
fn planted_cluster_is_isolated() {
    let ctx = Context::default();
    for seed in 0..3 {
        let inst = generate_planted(&PlantedSpec::new(vec![12, 12, 12], 4, seed)).unwrap();
        let task = IsolatedInstance::plain(inst.graph.clone(), 4, 12);
        let set = solve_isolated(&task, &ctx).unwrap().unwrap();
        assert!(isolated_feasible(&task, &set, conv()));
    }
}

fn binom(n: usize, r: usize) -> u64 {
    (0..r).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[test]
fn connected_set_counts_respect_bound() {
    let mut r = rng(37);
    for g in random_graphs(38, 40, 4, 12) {
        let v = r.gen_range(0..g.n());
        for b in 1..=5 {
            for f in 0..=5 {
                let mut sets = Vec::new();
                let count = enumerate_connected_sets(&g, v, b, f, &VertexSet::new(), |s| {
                    sets.push(s);
                    true
                });
                assert!(count as u64 <= binom(b + f, b));
                for s in &sets {
                    assert!(s.contains(v) && s.len() == b);
                    let boundary = s.iter().fold(VertexSet::new(), |acc, x| acc | g.neighbors(x)) - *s;
                    assert!(boundary.len() <= f);
                }
                sets.sort_by_key(|s| s.to_vec());
                sets.dedup();
                assert_eq!(sets.len(), count);
            }
        }
    }
}

#[test]
fn isolated_rejects_empty_target() {
    let inst = IsolatedInstance::plain(Graph::complete(3), 0, 0);
    assert!(solve_isolated(&inst, &Context::default()).is_err());
}
