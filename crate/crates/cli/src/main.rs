use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use mhs_kernel::ingest::{ingest_response_matrix, Direction, IngestOptions};
use mhs_kernel::pipeline::parse_phases;
use mhs_kernel::stats::{compute_stats, StatsRequest};
use mhs_kernel::{
    generate_random, run_pipeline, solve_opt, EngineKind, Hypergraph, LpOracle, Phase,
    PipelineSpec, SolveError, Status,
};

const EXIT_INFEASIBLE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "mhs",
    version,
    about = "Multiple Hitting Set kernelization toolkit"
)]
struct Cli {
    /// Increase log verbosity (-v info, -vv debug).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply reduction rules and write the kernel.
    Reduce(ReduceArgs),
    /// Compute a minimum multiple hitting set.
    Solve(SolveArgs),
    /// Print parameters of the incidence graph as JSON.
    Stats(StatsArgs),
    /// Generate a seeded random instance.
    Gen(GenArgs),
    /// Build an instance from a numeric CSV response matrix.
    Ingest(IngestArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Seq,
    Par,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    Exact,
    PushedMax,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Above,
    Below,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(short, long)]
    input: PathBuf,
    /// Kernel output; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Comma-separated rules from fe, se, dp, md, lp.
    #[arg(long, default_value = "dp,md")]
    rules: String,
    #[arg(long, value_enum, default_value = "par")]
    engine: EngineArg,
    /// Repeat the rule list until a pass deletes nothing.
    #[arg(long = "loop")]
    looped: bool,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Compute the kernel and round bounds (exact, may be slow).
    #[arg(long)]
    bounds: bool,
    /// Worker threads for the parallel engine; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Lower-bound oracle for lp.
    #[arg(long, value_enum)]
    lp_oracle: Option<OracleArg>,
    /// Search node limit for the exact lp oracle.
    #[arg(long, default_value_t = mhs_kernel::solver::DEFAULT_NODE_LIMIT)]
    node_limit: u64,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(long, default_value_t = mhs_kernel::solver::DEFAULT_NODE_LIMIT)]
    node_limit: u64,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(long)]
    dilworth: bool,
    #[arg(long)]
    diversity: bool,
    #[arg(long)]
    matching: bool,
    #[arg(long)]
    size: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    alpha: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct IngestArgs {
    #[arg(long)]
    csv: PathBuf,
    #[arg(long, default_value_t = 2.0)]
    sigmas: f64,
    #[arg(long)]
    alpha: u32,
    #[arg(long, value_enum, default_value = "above")]
    direction: DirectionArg,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn read_instance(path: &Path) -> Result<Hypergraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Hypergraph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn reduce(args: ReduceArgs) -> Result<u8> {
    let h = read_instance(&args.input)?;
    let mut phases = parse_phases(&args.rules)?;
    if let Some(oracle) = args.lp_oracle {
        let oracle = match oracle {
            OracleArg::Exact => LpOracle::Exact,
            OracleArg::PushedMax => LpOracle::PushedMax,
        };
        for phase in &mut phases {
            if let Phase::Lp(o) = phase {
                *o = oracle;
            }
        }
    }
    let engine = match args.engine {
        EngineArg::Seq => EngineKind::Sequential,
        EngineArg::Par => EngineKind::Parallel,
    };
    let mut spec = PipelineSpec::new(phases, engine)?
        .looped(args.looped)
        .workers(args.workers)
        .with_bounds(args.bounds);
    spec.node_limit = args.node_limit;

    let (kernel, report) = run_pipeline(&h, &spec);
    log::info!(
        "{}+{} -> {}+{} in {} rounds",
        report.n_before,
        report.m_before,
        report.n_after,
        report.m_after,
        report.rounds
    );
    write_output(args.output.as_deref(), &kernel.graph.to_text())?;
    if let Some(path) = &args.report {
        let mut body = serde_json::to_string_pretty(&report)?;
        body.push('\n');
        fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if report.infeasible {
        EXIT_INFEASIBLE
    } else {
        0
    })
}

fn solve(args: SolveArgs) -> Result<u8> {
    let h = read_instance(&args.input)?;
    let solution = match solve_opt(&h, args.node_limit) {
        Ok(s) => s,
        Err(e @ SolveError::NodeLimit(_)) => {
            eprintln!("error: {e}");
            return Ok(EXIT_LIMIT);
        }
        Err(e) => return Err(e.into()),
    };
    let chosen: Vec<usize> = solution.chosen.iter().map(|v| v + 1).collect();
    let out = json!({
        "status": solution.status,
        "cardinality": (solution.status != Status::Infeasible).then(|| solution.cardinality()),
        "chosen": chosen,
        "nodes": solution.nodes,
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(match solution.status {
        Status::Optimal => 0,
        Status::Infeasible | Status::BudgetExceeded => EXIT_INFEASIBLE,
    })
}

fn stats(args: StatsArgs) -> Result<u8> {
    let h = read_instance(&args.input)?;
    let mut req = StatsRequest {
        size: args.size,
        dilworth: args.dilworth,
        diversity: args.diversity,
        matching: args.matching,
    };
    if req == StatsRequest::default() {
        req = StatsRequest::all();
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&compute_stats(&h, &req))?
    );
    Ok(0)
}

fn gen(args: GenArgs) -> Result<u8> {
    let h = generate_random(args.n, args.m, args.p, args.alpha, args.seed)?;
    write_output(args.output.as_deref(), &h.to_text())?;
    Ok(0)
}

fn ingest(args: IngestArgs) -> Result<u8> {
    let file =
        fs::File::open(&args.csv).with_context(|| format!("reading {}", args.csv.display()))?;
    let opts = IngestOptions {
        sigmas: args.sigmas,
        alpha: args.alpha,
        direction: match args.direction {
            DirectionArg::Above => Direction::Above,
            DirectionArg::Below => Direction::Below,
        },
    };
    let out = ingest_response_matrix(file, &opts)?;
    if !out.dropped_rows.is_empty() {
        log::warn!("{} rows produced empty edges", out.dropped_rows.len());
    }
    write_output(args.output.as_deref(), &out.graph.to_text())?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();

    let result = match cli.command {
        Command::Reduce(a) => reduce(a),
        Command::Solve(a) => solve(a),
        Command::Stats(a) => stats(a),
        Command::Gen(a) => gen(a),
        Command::Ingest(a) => ingest(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
