//! `transreach`: generate instances, build oracles, query, verify, benchmark.

mod oracles;
mod report;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "transreach",
    version,
    about = "Reachability oracles for transmission graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a seeded random instance.
    Gen(GenArgs),
    /// Build an oracle and report its statistics.
    Build(BuildArgs),
    /// Answer reachability queries.
    Query(QueryArgs),
    /// Compare an oracle against brute force.
    Verify(VerifyArgs),
    /// Time builds and queries.
    Bench(BenchArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    Oned,
    Planar,
    Separator,
    Sample,
    Brute,
}

impl OracleKind {
    pub fn name(self) -> &'static str {
        match self {
            OracleKind::Oned => "oned",
            OracleKind::Planar => "planar",
            OracleKind::Separator => "separator",
            OracleKind::Sample => "sample",
            OracleKind::Brute => "brute",
        }
    }
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, default_value_t = 2)]
    dim: usize,
    #[arg(long)]
    n: usize,
    /// Side of the square (or segment) the centers are drawn from.
    #[arg(long = "box", default_value_t = 10.0)]
    box_side: f64,
    /// `uniform:LO:HI`, `two-scale:R1:R2:FRACTION` or `constant:R`.
    #[arg(long, default_value = "constant:1")]
    law: String,
    /// `K:SPREAD` to scatter points around K random centers.
    #[arg(long)]
    clusters: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct OracleArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    oracle: OracleKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sampling exponent override.
    #[arg(long)]
    alpha: Option<f64>,
    /// Build the sampling oracle without its random sample.
    #[arg(long)]
    empty_sample: bool,
    /// Let the planar oracle run for radius ratios up to 2 (experimental).
    #[arg(long)]
    allow_psi_two: bool,
    /// Separator tree representative choice: smallest or largest id per cell.
    #[arg(long)]
    largest_rep: bool,
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[command(flatten)]
    oracle: OracleArgs,
    /// Write the sparse graph and the plane graph (planar oracle) as DOT, one file with two digraphs.
    #[arg(long)]
    emit_dot: Option<PathBuf>,
    /// Write the separator tree as JSON.
    #[arg(long)]
    emit_tree: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct QueryArgs {
    #[command(flatten)]
    oracle: OracleArgs,
    /// Source vertex.
    s: u32,
    /// Target vertex; omit with `--point`.
    t: Option<u32>,
    /// Geometric query target, comma separated coordinates (`oned` and `brute`).
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    oracle: OracleArgs,
    /// Random pairs to check when the instance has more than 300 points.
    #[arg(long, default_value_t = 100_000)]
    budget: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[command(flatten)]
    oracle: OracleArgs,
    #[arg(long, default_value_t = 5)]
    repetitions: usize,
    /// Random queries timed per repetition.
    #[arg(long, default_value_t = 100_000)]
    budget: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Gen(a) => run::gen(
            a.dim,
            a.n,
            a.box_side,
            &a.law,
            a.clusters.as_deref(),
            a.seed,
            a.out.as_deref(),
        ),
        Command::Build(a) => run::build(
            &a.oracle,
            a.emit_dot.as_deref(),
            a.emit_tree.as_deref(),
            a.out.as_deref(),
        ),
        Command::Query(a) => run::query(&a.oracle, a.s, a.t, a.point.as_deref()),
        Command::Verify(a) => run::verify(&a.oracle, a.budget, a.out.as_deref()),
        Command::Bench(a) => run::bench(&a.oracle, a.repetitions, a.budget, a.out.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
