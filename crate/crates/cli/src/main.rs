mod commands;
mod output;
mod parse;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::{CliError, Report};

/// Exact and iterative evaluation of even rational integrals over [0, inf).
///
/// Coefficient lists are comma-separated and ascending in z^2, so
/// `--den 1,4,1` is z^4 + 4z^2 + 1. Entries may be integers, fractions
/// (`3/4`) or plain decimals (`0.25`).
#[derive(Parser, Debug)]
#[command(name = "landen", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    opts: Options,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed form when one exists, otherwise a numerical value.
    Integrate(IntegrandArgs),
    /// Rewrite P/Q^power over the reduced denominator (palindromic Q only).
    Reduce(IntegrandArgs),
    /// Iterate the Landen step and print the trajectory (power 1 only).
    Landen(IntegrandArgs),
    /// Report whether the exact pipeline reaches a closed form, and how.
    Classify(IntegrandArgs),
    /// Constraint matrices for palindromic denominators of half-degree 2p.
    Family(FamilyArgs),
    /// Run the built-in consistency suites.
    Verify,
}

#[derive(Args, Debug, Clone)]
struct IntegrandArgs {
    /// Numerator coefficients, ascending in z^2.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    num: String,
    /// Denominator coefficients, ascending in z^2.
    #[arg(long, allow_hyphen_values = true)]
    den: String,
    /// Power of the denominator.
    #[arg(long, default_value_t = 1)]
    power: u32,
}

#[derive(Args, Debug, Clone)]
struct FamilyArgs {
    /// Half-degree of the reduced denominator; a power of two, at least 4.
    #[arg(long, default_value_t = 4)]
    p: usize,
    /// Number of reduction levels constrained to stay palindromic
    /// (default: all the way down to half-degree 4).
    #[arg(long)]
    levels: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Significant digits in every printed decimal.
    #[arg(long, global = true, default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..=10_000))]
    pub digits: u32,
    /// Convergence tolerance for the Landen iteration.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Iteration cap for the Landen iteration.
    #[arg(long, global = true, default_value_t = 200)]
    pub max_iter: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for the randomized verify suites.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    pub seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let o = &cli.opts;
    match &cli.command {
        Command::Integrate(a) => {
            commands::integrate(&parse::integrand(&a.num, &a.den, a.power)?, o)
        }
        Command::Reduce(a) => commands::reduce(&parse::integrand(&a.num, &a.den, a.power)?, o),
        Command::Landen(a) => commands::landen(&parse::integrand(&a.num, &a.den, a.power)?, o),
        Command::Classify(a) => commands::classify(&parse::integrand(&a.num, &a.den, a.power)?, o),
        Command::Family(a) => commands::family(a.p, a.levels, o),
        Command::Verify => verify::run(o),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Integrate(_) => "integrate",
        Command::Reduce(_) => "reduce",
        Command::Landen(_) => "landen",
        Command::Classify(_) => "classify",
        Command::Family(_) => "family",
        Command::Verify => "verify",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let report = run(&cli)
        .unwrap_or_else(|e| Report::failure(command_name(&cli.command), cli.opts.digits, e));
    match cli.opts.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(&report.record).expect("record serializes")
        ),
        Format::Table => print!("{}", report.table),
    }
    if let Some(msg) = &report.message {
        eprintln!("landen: {msg}");
    }
    ExitCode::from(report.code)
}
