use std::time::Instant;

use hcc_core::hcd::{exact_hcd_value, hcd_fpt, HcdInstance};
use hcc_core::io::{fixtures, generate_planted, PlantedSpec};
use hcc_core::oracle::{brute_hcd, PARTITION_ORACLE_MAX_N};
use hcc_core::{Context, Graph, Result};

use crate::Algorithm;

const EXACT_MAX_N: usize = 20;
/// Largest budget tried when searching the optimum with the FPT solver.
const FPT_MAX_K: usize = 10;

const PLANTED_SIZES: [&[usize]; 7] = [&[3, 3], &[4, 4], &[3, 4, 5], &[5, 5], &[6, 6], &[4, 4, 4], &[7, 7]];
const PLANTED_NOISE: [usize; 3] = [0, 1, 2];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub instance: String,
    pub algorithm: &'static str,
    /// Optimum found, or `None` when the solver's cap was reached.
    pub answer: Option<usize>,
    pub ms: u64,
    pub nodes: u64,
    /// Set on every row of an instance whose solvers disagree.
    pub mismatch: bool,
}

impl BenchRow {
    pub fn csv_line(&self) -> String {
        let answer = self.answer.map_or_else(|| "none".to_string(), |v| v.to_string());
        format!("{},{},{},{},{}\n", self.instance, self.algorithm, answer, self.ms, self.nodes)
    }
}

fn instances(rng_seed: u64) -> Result<Vec<(String, Graph)>> {
    let mut out: Vec<(String, Graph)> = fixtures::fixtures()
        .into_iter()
        .map(|(name, g)| (name.to_string(), g))
        .collect();
    for (i, sizes) in PLANTED_SIZES.iter().enumerate() {
        for noise in PLANTED_NOISE {
            let seed = rng_seed.wrapping_add((i * PLANTED_NOISE.len() + noise) as u64);
            let inst = generate_planted(&PlantedSpec::new(sizes.to_vec(), noise, seed))?;
            let name = sizes.iter().map(usize::to_string).collect::<Vec<_>>().join("-");
            out.push((format!("planted-{name}-noise{noise}"), inst.graph));
        }
    }
    Ok(out)
}

fn timed(
    ctx: &Context,
    algorithm: &'static str,
    instance: &str,
    f: impl FnOnce() -> Result<Option<usize>>,
) -> Result<BenchRow> {
    let start = Instant::now();
    let answer = f()?;
    let s = ctx.stats.snapshot();
    Ok(BenchRow {
        instance: instance.to_string(),
        algorithm,
        answer,
        ms: start.elapsed().as_millis() as u64,
        nodes: s.branch_nodes + s.convolutions,
        mismatch: false,
    })
}

/// Runs the selected solvers on fixtures and planted instances and marks
/// instances where the optima disagree.
pub fn bench_rows(rng_seed: u64, algorithm: Algorithm, parallel: bool) -> Result<Vec<BenchRow>> {
    let run = |a: Algorithm| algorithm == Algorithm::Auto || algorithm == a;
    let fresh = || Context {
        parallel,
        ..Context::default()
    };
    let mut rows = Vec::new();
    for (name, g) in instances(rng_seed)? {
        let mut here = Vec::new();
        if run(Algorithm::Exact) && g.n() <= EXACT_MAX_N {
            let ctx = fresh();
            here.push(timed(&ctx, "exact", &name, || exact_hcd_value(&g, &ctx))?);
        }
        if run(Algorithm::Fpt) {
            let ctx = fresh();
            here.push(timed(&ctx, "fpt", &name, || {
                for k in 0..=FPT_MAX_K {
                    if hcd_fpt(&HcdInstance::new(g.clone(), k), &ctx)?.is_some() {
                        return Ok(Some(k));
                    }
                }
                Ok(None)
            })?);
        }
        if run(Algorithm::Oracle) && g.n() <= PARTITION_ORACLE_MAX_N {
            let ctx = fresh();
            here.push(timed(&ctx, "oracle", &name, || Ok(brute_hcd(&g, ctx.convention)?.min))?);
        }
        let mut values = here.iter().filter_map(|r| r.answer);
        let first = values.next();
        if values.any(|v| Some(v) != first) {
            for r in &mut here {
                r.mismatch = true;
            }
        }
        rows.extend(here);
    }
    Ok(rows)
}
