//! Command-line front end: argument parsing, solver dispatch and reports.
//!
//! Exit codes: 0 for a YES answer or a solved optimisation, 1 for NO, 2 for
//! usage, input and solver errors.

mod bench;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use hcc_core::hcd::{exact_hcd, hcd_fpt, verify_hcd_solution, HcdInstance};
use hcc_core::io::{generate_planted, parse_charges, parse_graph, serialize_graph, PlantedSpec};
use hcc_core::oracle::{brute_hcd, brute_isolated, brute_phcd, brute_seeded};
use hcc_core::phcd::{solve_phcd, verify_phcd_solution, PhcdInstance};
use hcc_core::subgraph::{
    isolated_feasible, solve_isolated, solve_seeded, verify_seeded, IsolatedInstance,
    SeededInstance,
};
use hcc_core::{Context, Convention, Graph, Partition, VertexSet};

use report::{Answer, Certificate, Params, RunReport, RunStats};

pub use bench::{bench_rows, BenchRow};

#[derive(Parser, Debug)]
#[command(name = "hcc", version, about = "Highly connected clustering solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Graph file: header `n m`, then one `u v` line per edge.
    #[arg(long)]
    input: PathBuf,
    /// Print a single JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Treat a single edge as highly connected.
    #[arg(long, value_name = "BOOL", default_value_t = false, action = ArgAction::Set)]
    k2_is_hc: bool,
    /// Worker threads for independent branches.
    #[arg(long, value_name = "N")]
    threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleProblem {
    Hcd,
    Phcd,
    Seeded,
    Isolated,
}

/// Which solvers `bench` runs; `auto` runs every one within its size cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Auto,
    Exact,
    Fpt,
    Oracle,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimum deletions by dynamic programming over subsets.
    HcdExact {
        #[command(flatten)]
        common: Common,
        /// Answer yes/no for this budget instead of printing the optimum.
        #[arg(long)]
        k: Option<usize>,
    },
    /// At most k deletions, by branching and structural search.
    HcdFpt {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: usize,
    },
    /// At most k deletions leaving at most p components.
    Phcd {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        k: usize,
        /// Answer NO once more than this many k-cuts are enumerated.
        #[arg(long)]
        cut_cap: Option<u64>,
    },
    /// One component of size |seed| + a containing the seed set.
    Seeded {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "CSV", value_parser = parse_csv)]
        seed_set: Csv,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        k: usize,
    },
    /// A size-s set with cut plus charges at most k.
    Isolated {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        k: usize,
        /// Per-vertex charges, whitespace separated.
        #[arg(long, value_name = "FILE")]
        charges: Option<PathBuf>,
    },
    /// Exhaustive reference solvers for small graphs.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = OracleProblem::Hcd)]
        problem: OracleProblem,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long, value_name = "CSV", value_parser = parse_csv)]
        seed_set: Option<Csv>,
        #[arg(long, value_name = "FILE")]
        charges: Option<PathBuf>,
    },
    /// Planted instance: cliques (or denser-than-half random clusters)
    /// plus noise edges.
    Gen {
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        #[arg(long, value_name = "CSV", value_parser = parse_csv)]
        clusters: Csv,
        #[arg(long, default_value_t = 0)]
        noise: usize,
        #[arg(long, default_value_t = 1.0)]
        density: f64,
    },
    /// CSV of solver runs over fixtures and planted instances.
    Bench {
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
        algorithm: Algorithm,
        #[arg(long, value_name = "N")]
        threads: Option<usize>,
    },
}

/// Comma-separated vertex indices or sizes.
#[derive(Clone, Debug)]
struct Csv(Vec<usize>);

fn parse_csv(s: &str) -> Result<Csv, String> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("invalid integer {t:?}")))
        .collect::<Result<_, _>>()
        .map(Csv)
}

/// Failure that ends the run with exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(Answer, String), Failure>;

/// Parses `argv` (program name first), runs the command, and writes the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command) {
        Ok((answer, text)) => {
            let _ = write!(out, "{text}");
            if answer.is_no() {
                1
            } else {
                0
            }
        }
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_charges(path: Option<&PathBuf>, n: usize) -> Result<Vec<u32>, Failure> {
    match path {
        None => Ok(vec![0; n]),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Failure(format!("cannot read {}: {e}", p.display())))?;
            parse_charges(&text, n).map_err(|e| Failure(format!("{}: {e}", p.display())))
        }
    }
}

fn context(common: &Common) -> Context {
    Context {
        parallel: common.threads.is_some_and(|t| t > 1),
        ..Context::with_convention(Convention {
            k2_is_hc: common.k2_is_hc,
        })
    }
}

/// Runs `f` on a pool of the requested size, or on the caller's thread.
fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(Failure("--threads must be positive".into())),
        Some(n) => Ok(rayon::ThreadPoolBuilder::new().num_threads(n).build()?.install(f)),
    }
}

fn require(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure(format!("missing required flag --{flag}")))
}

/// Emits the report; refuses to print a certificate that does not verify.
struct Emit<'a> {
    problem: &'static str,
    common: &'a Common,
    ctx: &'a Context,
    start: Instant,
}

impl Emit<'_> {
    fn finish(
        &self,
        params: Params,
        answer: Answer,
        certificate: Option<Certificate>,
        verified: bool,
    ) -> Outcome {
        if !verified {
            return Err(Failure("internal error: certificate failed verification".into()));
        }
        let report = RunReport {
            problem: self.problem.into(),
            instance: self.common.input.display().to_string(),
            params,
            answer,
            certificate,
            stats: RunStats::new(self.start.elapsed().as_millis() as u64, self.ctx.stats.snapshot()),
        };
        let text = if self.common.json {
            serde_json::to_string_pretty(&report)? + "\n"
        } else {
            report.to_string()
        };
        Ok((answer, text))
    }
}

fn partition_certificate(g: &Graph, p: &Partition) -> Certificate {
    Certificate::partition(p, p.inter_block_edges(g))
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::HcdExact { common, k } => {
            let g = read_graph(&common.input)?;
            let ctx = context(&common);
            let emit = Emit { problem: "hcd-exact", common: &common, ctx: &ctx, start: Instant::now() };
            let sol = with_threads(common.threads, || exact_hcd(&g, &ctx))??;
            let params = Params { k, ..Params::default() };
            match sol {
                None => emit.finish(params, Answer::yes(false), None, true),
                Some(sol) => {
                    let cost = sol.cost();
                    let ok = verify_hcd_solution(&g, &sol, cost, ctx.convention);
                    let answer = match k {
                        Some(k) if cost > k => return emit.finish(params, Answer::yes(false), None, ok),
                        Some(_) => Answer::yes(true),
                        None => Answer::Value(cost),
                    };
                    emit.finish(params, answer, Some(partition_certificate(&g, &sol.partition)), ok)
                }
            }
        }
        Command::HcdFpt { common, k } => {
            let g = read_graph(&common.input)?;
            let ctx = context(&common);
            let emit = Emit { problem: "hcd-fpt", common: &common, ctx: &ctx, start: Instant::now() };
            let inst = HcdInstance::new(g.clone(), k);
            let sol = with_threads(common.threads, || hcd_fpt(&inst, &ctx))??;
            let params = Params { k: Some(k), ..Params::default() };
            match sol {
                None => emit.finish(params, Answer::yes(false), None, true),
                Some(sol) => {
                    let ok = verify_hcd_solution(&g, &sol, k, ctx.convention);
                    emit.finish(params, Answer::yes(true), Some(partition_certificate(&g, &sol.partition)), ok)
                }
            }
        }
        Command::Phcd { common, p, k, cut_cap } => {
            let g = read_graph(&common.input)?;
            let ctx = Context { cut_cap, ..context(&common) };
            let emit = Emit { problem: "phcd", common: &common, ctx: &ctx, start: Instant::now() };
            let inst = PhcdInstance::new(g.clone(), p, k);
            let sol = with_threads(common.threads, || solve_phcd(&inst, &ctx))??;
            let params = Params { k: Some(k), p: Some(p), ..Params::default() };
            match sol {
                None => emit.finish(params, Answer::yes(false), None, true),
                Some(sol) => {
                    let ok = verify_phcd_solution(&inst, &sol, &ctx);
                    let cert = Certificate::partition(&sol.partition, sol.deleted_edges);
                    emit.finish(params, Answer::yes(true), Some(cert), ok)
                }
            }
        }
        Command::Seeded { common, seed_set: Csv(seed_set), a, k } => {
            let g = read_graph(&common.input)?;
            let ctx = context(&common);
            let emit = Emit { problem: "seeded", common: &common, ctx: &ctx, start: Instant::now() };
            let inst = SeededInstance { graph: g, seed: seed_set.iter().copied().collect(), a, k };
            let found = with_threads(common.threads, || solve_seeded(&inst, &ctx))??;
            let params = Params { k: Some(k), a: Some(a), seed_set: Some(seed_set), ..Params::default() };
            let ok = found.as_ref().is_none_or(|c| verify_seeded(&inst, c, ctx.convention));
            emit.finish(params, Answer::yes(found.is_some()), found.as_ref().map(Certificate::vertices), ok)
        }
        Command::Isolated { common, s, k, charges } => {
            let g = read_graph(&common.input)?;
            let ctx = context(&common);
            let emit = Emit { problem: "isolated", common: &common, ctx: &ctx, start: Instant::now() };
            let charges = read_charges(charges.as_ref(), g.n())?;
            let inst = IsolatedInstance { graph: g, charges, k, s };
            let found = with_threads(common.threads, || solve_isolated(&inst, &ctx))??;
            let params = Params { k: Some(k), s: Some(s), ..Params::default() };
            let ok = found.as_ref().is_none_or(|c| isolated_feasible(&inst, c, ctx.convention));
            emit.finish(params, Answer::yes(found.is_some()), found.as_ref().map(Certificate::vertices), ok)
        }
        Command::Oracle { common, problem, k, p, s, a, seed_set, charges } => {
            let g = read_graph(&common.input)?;
            let ctx = context(&common);
            let conv = ctx.convention;
            let emit = Emit { problem: "oracle", common: &common, ctx: &ctx, start: Instant::now() };
            match problem {
                OracleProblem::Hcd => {
                    let best = brute_hcd(&g, conv)?;
                    let params = Params { k, ..Params::default() };
                    let (Some(min), Some(part)) = (best.min, best.optimal.first()) else {
                        return emit.finish(params, Answer::yes(false), None, true);
                    };
                    let answer = match k {
                        Some(k) if min > k => return emit.finish(params, Answer::yes(false), None, true),
                        Some(_) => Answer::yes(true),
                        None => Answer::Value(min),
                    };
                    emit.finish(params, answer, Some(partition_certificate(&g, part)), true)
                }
                OracleProblem::Phcd => {
                    let (p, k) = (require(p, "p")?, require(k, "k")?);
                    let yes = brute_phcd(&g, p, k, conv)?;
                    let params = Params { k: Some(k), p: Some(p), ..Params::default() };
                    emit.finish(params, Answer::yes(yes), None, true)
                }
                OracleProblem::Seeded => {
                    let Csv(seed_set) = seed_set.ok_or_else(|| Failure("missing required flag --seed-set".into()))?;
                    let (a, k) = (require(a, "a")?, require(k, "k")?);
                    let seed: VertexSet = seed_set.iter().copied().collect();
                    let found = brute_seeded(&g, &seed, a, k, conv)?;
                    let params = Params { k: Some(k), a: Some(a), seed_set: Some(seed_set), ..Params::default() };
                    emit.finish(params, Answer::yes(found.is_some()), found.as_ref().map(Certificate::vertices), true)
                }
                OracleProblem::Isolated => {
                    let (s, k) = (require(s, "s")?, require(k, "k")?);
                    let charges = read_charges(charges.as_ref(), g.n())?;
                    let found = brute_isolated(&g, &charges, k, s, conv)?;
                    let params = Params { k: Some(k), s: Some(s), ..Params::default() };
                    emit.finish(params, Answer::yes(found.is_some()), found.as_ref().map(Certificate::vertices), true)
                }
            }
        }
        Command::Gen { rng_seed, clusters: Csv(clusters), noise, density } => {
            let spec = PlantedSpec { density, ..PlantedSpec::new(clusters.clone(), noise, rng_seed) };
            let inst = generate_planted(&spec)?;
            let sizes: Vec<String> = clusters.iter().map(usize::to_string).collect();
            let text = format!(
                "# planted clusters {} with {noise} noise edges, rng seed {rng_seed}\n{}",
                sizes.join(","),
                serialize_graph(&inst.graph)
            );
            Ok((Answer::yes(true), text))
        }
        Command::Bench { rng_seed, algorithm, threads } => {
            let rows = with_threads(threads, || bench_rows(rng_seed, algorithm, threads.is_some_and(|t| t > 1)))??;
            let mismatches = rows.iter().filter(|r| r.mismatch).count();
            let mut text = String::from("instance,algorithm,answer,ms,nodes\n");
            for r in &rows {
                text.push_str(&r.csv_line());
            }
            if mismatches > 0 {
                return Err(Failure(format!("{mismatches} answers disagree across solvers\n{text}")));
            }
            Ok((Answer::yes(true), text))
        }
    }
}
