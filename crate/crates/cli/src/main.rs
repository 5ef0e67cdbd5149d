//! `ybx`: construct, verify, classify and enumerate linear set-theoretical
//! solutions of the quantum Yang-Baxter equation.
//!
//! Results go to stdout, diagnostics to stderr. Exit status is 0 on
//! success, 1 when the mathematics fails (a check, a completion, an
//! inclusion), 2 for malformed input or usage errors.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ybx_core::ybkernel::CheckSet;

#[derive(Parser)]
#[command(name = "ybx", version, about = "Linear solutions of the quantum Yang-Baxter equation over (Z/m)^N")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a solution file (JSON) or a permutation table (text).
    Verify(VerifyArgs),
    /// Complete (a, b) to a solution, or build the canonical one of a Jordan type.
    Construct(ConstructArgs),
    /// Like `construct`, with the translation `z` required.
    ConstructAffine(ConstructArgs),
    /// List every pair (a, b) over Mat_N(Z/m) as JSON lines.
    Enumerate(EnumerateArgs),
    /// Exhaustive permutation census on a set of n elements.
    SearchSet(SearchSetArgs),
    /// Nilpotency, Jordan type and canonical-form comparison for a pair.
    Classify(ClassifyArgs),
    /// Compare the linear solutions over (Z/m)^N with the permutation census.
    CrossValidate(GroupArgs),
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long = "mod", value_name = "M")]
    modulus: u64,
    #[arg(long, value_name = "N")]
    rank: usize,
}

#[derive(Args)]
struct VerifyArgs {
    file: std::path::PathBuf,
    /// Evaluate on the explicit permutation of X×X instead of block identities.
    #[arg(long)]
    set_level: bool,
    #[arg(long, default_value = "qybe,unitarity,crossing")]
    checks: CheckSet,
    /// Label a permutation table by (Z/m)^N (with --rank).
    #[arg(long = "mod", value_name = "M", requires = "rank")]
    modulus: Option<u64>,
    #[arg(long, value_name = "N", requires = "modulus")]
    rank: Option<usize>,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long = "mod", value_name = "M")]
    modulus: u64,
    /// Required with --a/--b; implied by --type otherwise.
    #[arg(long, value_name = "N")]
    rank: Option<usize>,
    #[arg(long, value_name = "MATRIX", requires = "b", conflicts_with = "jordan_type")]
    a: Option<String>,
    #[arg(long, value_name = "MATRIX", requires = "a")]
    b: Option<String>,
    /// Jordan block sizes, e.g. 2,1, for the canonical solution.
    #[arg(long = "type", value_name = "PARTS", value_delimiter = ',', required_unless_present = "a")]
    jordan_type: Option<Vec<usize>>,
    /// Invertible matrix commuting with the canonical a (default identity).
    #[arg(long, value_name = "MATRIX", requires = "jordan_type")]
    commutant: Option<String>,
    #[arg(long, value_name = "VECTOR")]
    z: Option<String>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    group: GroupArgs,
    #[arg(long, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
    /// Leave wall-clock time out of the summary.
    #[arg(long)]
    no_elapsed: bool,
    /// Largest number of candidate matrices to examine.
    #[arg(long, value_name = "COUNT")]
    budget: Option<u128>,
}

#[derive(Args)]
struct SearchSetArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "qybe,unitarity,crossing")]
    checks: CheckSet,
    #[arg(long, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
    #[arg(long)]
    no_elapsed: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    file: std::path::PathBuf,
    /// For an integer matrix, compare Jordan types across primes.
    #[arg(long)]
    probe_prop5: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::workers_from_env().and_then(|workers| match cli.command {
        Command::Verify(args) => commands::verify(args),
        Command::Construct(args) => commands::construct(args, false),
        Command::ConstructAffine(args) => commands::construct(args, true),
        Command::Enumerate(args) => commands::enumerate(args, workers),
        Command::SearchSet(args) => commands::search_set(args, workers),
        Command::Classify(args) => commands::classify(args),
        Command::CrossValidate(args) => commands::cross_validate(args, workers),
    });
    match result {
        Ok(commands::Status::Pass) => ExitCode::SUCCESS,
        Ok(commands::Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("ybx: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
