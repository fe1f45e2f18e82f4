//! `glpdom`: compute domination parameters, build generalized lexicographic
//! products, enumerate minimal families, sweep the product checks and hunt
//! for open-problem witnesses.
//!
//! Exit codes: 0 success, 1 other failure, 2 parse or usage error, 3 guard
//! breach, 4 a check reported a violation.

use std::fs::{File, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use glpdom::domination::{is_ab_dominating, is_efficient_dominating, GUARD_ENV};
use glpdom::io::{emit_graph, parse_edgelist, parse_graph, parse_graph6, GraphFormat};
use glpdom::theorems::hunt::CIRCULANT_READING;
use glpdom::theorems::{hunt, resolve_pool, sweep, HuntTarget, Instance, InstanceSpace, TheoremId};
use glpdom::{Error, Graph, Guards, ParamName, ProductGraph, PropertyPair, Solver};

/// Bitmask kernels cap every exhaustive search at this order.
const MAX_GUARD: usize = 64;

#[derive(Parser)]
#[command(name = "glpdom", version, about = "Exact (A,B)-domination on graphs and generalized lexicographic products")]
struct Cli {
    /// Subset-search order limit (overrides GLPDOM_GUARD_N).
    #[arg(long, global = true)]
    guard_n: Option<usize>,
    /// Worker threads for sweeps and hunts.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One named parameter of a graph.
    Compute {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        param: ParamName,
        /// Report the upper parameter (maximum over minimal sets).
        #[arg(long)]
        upper: bool,
    },
    /// Build G[Φ] from a spec file and print it.
    Product {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Print a family of vertex sets.
    Enumerate {
        #[command(flatten)]
        input: GraphInput,
        /// Minimal dominating (A,B)-sets, e.g. `I,I` or `total,connected`.
        #[arg(long, conflicts_with_all = ["efficient", "independent"])]
        pair: Option<PropertyPair>,
        /// Efficient dominating sets.
        #[arg(long, conflicts_with = "independent")]
        efficient: bool,
        /// Maximal independent sets.
        #[arg(long)]
        independent: bool,
    },
    /// Run product checks over an instance space.
    Verify(VerifyArgs),
    /// Search for open-problem witnesses.
    Hunt {
        /// `eff-gt-half` or `well-mu-glp:<param>`.
        #[arg(long)]
        target: HuntTarget,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "default")]
        pool: String,
        #[arg(long, default_value_t = 3)]
        fmax: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph in graph6.
    #[arg(long)]
    g6: Option<String>,
    /// Path to an edge-list file.
    #[arg(long)]
    edgelist: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// `all` or a comma-separated list such as `T2,T6`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Largest base order in the exhaustive space.
    #[arg(long, default_value_t = 4)]
    bmax: usize,
    /// Largest factor order drawn from the default pool.
    #[arg(long, default_value_t = 3)]
    fmax: usize,
    /// `default`, `tiny`, `k1`, `contains-K1`, or a file of graph6 lines.
    #[arg(long, default_value = "default")]
    pool: String,
    /// Factor assignments per base.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Draw this many random bases instead of enumerating them.
    #[arg(long, conflicts_with = "spec")]
    random: Option<usize>,
    /// Check a single product given by a spec file.
    #[arg(long)]
    spec: Option<PathBuf>,
}

#[derive(Deserialize)]
struct GraphSpec {
    format: String,
    data: String,
}

#[derive(Deserialize)]
struct ProductSpec {
    base: GraphSpec,
    factors: Vec<GraphSpec>,
}

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn new(code: u8, msg: impl Into<String>) -> Self {
        Failure { code, msg: msg.into() }
    }

    /// Attributes a library error to the flag whose input caused it.
    fn core(flag: &str, e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 2,
            Error::SizeLimitExceeded { .. } => 3,
            _ => 1,
        };
        Failure::new(code, format!("{flag}: {e}"))
    }

    fn io(what: &Path, e: io::Error) -> Self {
        Failure::new(1, format!("{}: {e}", what.display()))
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("glpdom: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn guards(cli: &Cli) -> CliResult<Guards> {
    let g = match cli.guard_n {
        Some(n) => Guards::default().with_subset_order(n),
        None => Guards::from_env().map_err(|e| Failure::core(GUARD_ENV, e))?,
    };
    if g.search_order > MAX_GUARD {
        return Err(Failure::new(2, format!("--guard-n: {} exceeds the bitmask limit {MAX_GUARD}", g.search_order)));
    }
    Ok(g)
}

fn output(cli: &Cli, append: bool) -> CliResult<Box<dyn Write>> {
    Ok(match &cli.out {
        None => Box::new(BufWriter::new(io::stdout().lock())),
        Some(p) => {
            let f = if append {
                OpenOptions::new().create(true).append(true).open(p)
            } else {
                File::create(p)
            };
            Box::new(BufWriter::new(f.map_err(|e| Failure::io(p, e))?))
        }
    })
}

fn emit(w: &mut dyn Write, v: &impl serde::Serialize) -> CliResult<()> {
    let line = serde_json::to_string(v).expect("plain data serializes");
    writeln!(w, "{line}").map_err(|e| Failure::new(1, format!("write: {e}")))
}

fn header(command: &str, guards: &Guards, seed: Option<u64>, flags: Value) -> Value {
    let ts = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
    json!({
        "header": {
            "version": env!("CARGO_PKG_VERSION"),
            "command": command,
            "seed": seed,
            "guards": guards,
            "flags": flags,
            "timestamp": ts,
        }
    })
}

fn read_graph(input: &GraphInput) -> CliResult<Graph> {
    if let Some(s) = &input.g6 {
        return parse_graph6(s).map_err(|e| Failure::core("--g6", e));
    }
    let path = input.edgelist.as_ref().expect("clap requires one input");
    let text = std::fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    parse_edgelist(&text).map_err(|e| Failure::core("--edgelist", e))
}

fn read_spec(path: &Path) -> CliResult<(Graph, Vec<Graph>)> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    let spec: ProductSpec = serde_json::from_str(&text)
        .map_err(|e| Failure::new(2, format!("--spec: {e}")))?;
    let one = |g: &GraphSpec, what: String| -> CliResult<Graph> {
        let fmt: GraphFormat = g.format.parse().map_err(|e| Failure::core("--spec", e))?;
        parse_graph(&g.data, fmt).map_err(|e| Failure::new(2, format!("--spec {what}: {e}")))
    };
    let base = one(&spec.base, "base".into())?;
    let factors = spec
        .factors
        .iter()
        .enumerate()
        .map(|(i, f)| one(f, format!("factor {i}")))
        .collect::<CliResult<Vec<_>>>()?;
    Ok((base, factors))
}

fn run(cli: Cli) -> CliResult<()> {
    let guards = guards(&cli)?;
    let solver = Solver::new(guards);
    match &cli.command {
        Command::Compute { input, param, upper } => {
            let g = read_graph(input)?;
            let upper = *upper || param.forces_upper();
            let r = solver.param(&g, *param, upper).map_err(|e| Failure::core("--param", e))?;
            if let Some(e) = &r {
                let pair = param.pair();
                let ok = is_ab_dominating(&g, &e.witness, pair)
                    && (!upper
                        || solver
                            .is_minimal_ab_dominating(&g, &e.witness, pair)
                            .map_err(|e| Failure::core("--param", e))?);
                if !ok {
                    return Err(Failure::new(1, format!("witness {} failed re-validation", e.witness)));
                }
            }
            let mut w = output(&cli, false)?;
            emit(
                &mut *w,
                &json!({
                    "param": param.to_string(),
                    "upper": upper,
                    "value": r.as_ref().map(|e| e.value),
                    "witness": r.as_ref().map(|e| e.witness.to_vec()),
                }),
            )?;
            w.flush().map_err(|e| Failure::new(1, e.to_string()))
        }
        Command::Product { spec, format } => {
            let (base, factors) = read_spec(spec)?;
            let p = ProductGraph::build(&base, &factors).map_err(|e| Failure::core("--spec", e))?;
            let mut w = output(&cli, false)?;
            writeln!(w, "{}", emit_graph(p.graph(), *format).trim_end())
                .and_then(|_| w.flush())
                .map_err(|e| Failure::new(1, e.to_string()))
        }
        Command::Enumerate { input, pair, efficient, independent } => {
            let g = read_graph(input)?;
            let (kind, sets) = if *efficient {
                let sets = solver.enumerate_efficient(&g).map_err(|e| Failure::core("--efficient", e))?;
                assert!(sets.iter().all(|d| is_efficient_dominating(&g, d)));
                ("efficient".to_string(), sets)
            } else if *independent {
                let sets = solver.maximal_independent_sets(&g).map_err(|e| Failure::core("--independent", e))?;
                ("maximal-independent".to_string(), sets)
            } else {
                let pair = pair.ok_or_else(|| Failure::new(2, "enumerate needs --pair, --efficient or --independent"))?;
                let sets = solver.enumerate_minimal(&g, pair).map_err(|e| Failure::core("--pair", e))?;
                (format!("minimal {pair}"), sets)
            };
            let mut w = output(&cli, false)?;
            emit(
                &mut *w,
                &json!({
                    "family": kind,
                    "count": sets.len(),
                    "sets": sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
                }),
            )?;
            w.flush().map_err(|e| Failure::new(1, e.to_string()))
        }
        Command::Verify(args) => verify(&cli, args, &solver),
        Command::Hunt { target, budget, seed, pool, fmax } => {
            let pool_graphs = match target {
                HuntTarget::WellMu(_) => resolve_pool(pool, *fmax).map_err(|e| Failure::core("--pool", e))?,
                HuntTarget::EffGtHalf => Vec::new(),
            };
            let mut flags = json!({"target": target.to_string(), "budget": budget, "pool": pool, "fmax": fmax});
            if *target == HuntTarget::EffGtHalf {
                flags["circulant_reading"] = json!(CIRCULANT_READING);
            }
            let rows = with_jobs(cli.jobs, || hunt(&solver, *target, *budget, *seed, &pool_graphs))?
                .map_err(|e| Failure::core("--target", e))?;
            let mut w = output(&cli, true)?;
            emit(&mut *w, &header("hunt", &guards, Some(*seed), flags))?;
            for r in &rows {
                emit(&mut *w, r)?;
            }
            w.flush().map_err(|e| Failure::new(1, e.to_string()))
        }
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> CliResult<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Failure::new(2, "--jobs: must be at least 1")),
        Some(j) => rayon_pool(j).map(|p| p.install(f)),
    }
}

fn rayon_pool(j: usize) -> CliResult<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(j)
        .build()
        .map_err(|e| Failure::new(1, format!("--jobs: {e}")))
}

fn verify(cli: &Cli, args: &VerifyArgs, solver: &Solver) -> CliResult<()> {
    let ids = TheoremId::parse_list(&args.suite).map_err(|e| Failure::new(2, format!("--suite: {e}")))?;
    let space = if let Some(spec) = &args.spec {
        let (base, factors) = read_spec(spec)?;
        InstanceSpace::Explicit(vec![Instance { base, factors }])
    } else {
        let pool = resolve_pool(&args.pool, args.fmax).map_err(|e| Failure::core("--pool", e))?;
        match args.random {
            Some(count) => InstanceSpace::Random {
                count,
                bmin: 2,
                bmax: args.bmax,
                pool,
                seed: args.seed,
            },
            None => InstanceSpace::Exhaustive {
                bmin: 2,
                bmax: args.bmax,
                pool,
                samples: args.samples,
                seed: args.seed,
            },
        }
    };
    let flags = json!({
        "suite": args.suite,
        "bmax": args.bmax,
        "fmax": args.fmax,
        "pool": args.pool,
        "samples": args.samples,
        "random": args.random,
        "spec": args.spec,
    });
    let outcome = with_jobs(cli.jobs, || sweep(solver, &ids, &space, None))?
        .map_err(|e| Failure::core("--bmax", e))?;
    let mut w = output(cli, false)?;
    emit(&mut *w, &header("verify", &solver.guards, Some(args.seed), flags))?;
    for r in &outcome.records {
        emit(&mut *w, r)?;
    }
    let summary: serde_json::Map<String, Value> = outcome
        .summaries
        .iter()
        .map(|(id, s)| {
            (
                id.to_string(),
                json!({"holds": s.holds, "violated": s.violated, "not_applicable": s.not_applicable}),
            )
        })
        .collect();
    emit(&mut *w, &json!({"summary": summary, "violations": outcome.violations()}))?;
    w.flush().map_err(|e| Failure::new(1, e.to_string()))?;
    match outcome.first_violation() {
        None => Ok(()),
        Some(r) => Err(Failure::new(
            4,
            format!(
                "{} violation(s); first: {}",
                outcome.violations(),
                serde_json::to_string(r).expect("plain data")
            ),
        )),
    }
}
