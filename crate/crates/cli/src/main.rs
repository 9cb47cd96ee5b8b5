//! `tropmech`: JSON-in/JSON-out analysis of finite-type mechanisms.
//!
//! Exit codes: 0 success (negative verdicts included), 2 malformed input,
//! 3 semantic precondition failure, 4 enumeration budget exceeded,
//! 5 internal cross-check violation. See SCHEMA.md at the repository root.

mod commands;
mod request;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "tropmech", version, about = "Tropical analysis of finite-type mechanisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Svg,
}

#[derive(clap::Args)]
pub struct CommonArgs {
    /// Path to the JSON request.
    #[arg(long)]
    input: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Enumeration budget override (assignments); also TROPMECH_BUDGET.
    #[arg(long)]
    budget: Option<u64>,
    /// Perturbation radius, an exact rational like "1/100".
    #[arg(long)]
    epsilon: Option<String>,
    /// Output format (render defaults to svg, everything else to json).
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide incentive compatibility of a mechanism (Rochet criterion).
    IcCheck(CommonArgs),
    /// Compute the polytrope of incentive-compatible payments.
    Payments(CommonArgs),
    /// Enumerate all IC outcome functions and basic cells.
    Enumerate(CommonArgs),
    /// Decide revenue equivalence of the type space, with certificate.
    ReCheck(CommonArgs),
    /// Find an outcome function realizing a candidate matrix.
    Realize(CommonArgs),
    /// Deterministically perturb the type space into a generic one.
    Perturb(CommonArgs),
    /// Render the arrangement, basic cells and overlays as SVG (m = 3).
    Render(CommonArgs),
}

/// A diagnostic paired with the process exit code it maps to.
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn malformed(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn semantic(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::IcCheck(args) => commands::ic_check(args),
        Command::Payments(args) => commands::payments(args),
        Command::Enumerate(args) => commands::enumerate(args),
        Command::ReCheck(args) => commands::re_check(args),
        Command::Realize(args) => commands::realize(args),
        Command::Perturb(args) => commands::perturb(args),
        Command::Render(args) => commands::render(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("tropmech: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}
