//! The `moncurve` command line: table reproduction, verifications and
//! direct access to the solvers, with a JSON report per run.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 usage or domain error,
//! 3 precision-budget refusal.

mod commands;
mod expr;
mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;

pub use expr::{eval, eval_integer};
pub use report::{RunReport, Verdict};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "moncurve",
    version,
    about = "High-precision checks on BPS monopole spectral curves"
)]
pub struct Cli {
    /// Decimal digits of the result tolerance; working precision adds guard digits.
    #[arg(long, global = true, default_value_t = 50)]
    pub digits: u32,
    /// Print the JSON report on stdout and the table on stderr.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute a published table.
    Reproduce {
        #[command(subcommand)]
        what: Reproduce,
    },
    /// Run a named verification.
    Verify {
        #[command(subcommand)]
        target: Verify,
    },
    /// Search for an integer polynomial vanishing at an expression.
    Probe {
        expr: String,
        #[arg(long, default_value_t = 4)]
        dmax: u32,
        #[arg(long, default_value = "10000")]
        hmax: String,
    },
    /// Solve the trigonal constraints for a pair (n, m).
    EsSolve {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Build and export curves.
    Curve {
        #[command(subcommand)]
        action: CurveCommand,
    },
    /// Integer relation among the values listed in a file, one expression per line.
    Relation {
        #[arg(long)]
        values: PathBuf,
        #[arg(long, default_value = "1000")]
        max_norm: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum Reproduce {
    /// Solutions (t, b) for the five pairs of the trigonal table.
    Table2 {
        /// A single pair, e.g. "4,-1".
        #[arg(long, allow_hyphen_values = true)]
        row: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// Reality condition; the whole suite unless a row, pair or file is given.
    H1 {
        #[command(flatten)]
        params: RowParams,
        /// Trigonal pair "n,m".
        #[arg(long, allow_hyphen_values = true)]
        pair: Option<String>,
        /// Curve file written by `curve build --out`.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Γ-form against Beta-integral form of the Platonic constants.
    Table1Constants,
    /// Charge-2 period relation u·p1 + v·p2 = -2.
    Charge2Es {
        #[arg(long, allow_hyphen_values = true)]
        k: Vec<String>,
        /// Multiplier on the normalization K(k)²/4.
        #[arg(long)]
        factor: Option<String>,
    },
    /// Partial sums of the two Ramanujan series.
    Ramanujan {
        #[arg(long)]
        series: Option<u32>,
        #[arg(long)]
        terms: Option<u32>,
    },
    /// π ₂F₁(1/3, 2/3; 1; t) against its Euler integral.
    HypIntegral {
        #[arg(long)]
        t: Vec<String>,
    },
    /// Legendre's relation E K' + E' K - K K' = π/2.
    Legendre {
        #[arg(long)]
        k: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CurveCommand {
    /// Build a table curve (or a trigonal curve with --pair).
    Build {
        #[command(flatten)]
        params: RowParams,
        #[arg(long, allow_hyphen_values = true)]
        pair: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct RowParams {
    #[arg(long)]
    pub row: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    /// "+" or "-".
    #[arg(long, allow_hyphen_values = true)]
    pub sign: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub epsilon: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Precision { .. } => EXIT_PRECISION,
        Error::Accuracy { .. } | Error::NoPeriodRelation { .. } => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

/// Result of one invocation: exit code, the report when the command ran,
/// and any message for stderr.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Option<RunReport>,
    pub message: String,
    /// Whether `--json` was given.
    pub json: bool,
}

/// Parses `args` (including the program name) and runs the command without
/// printing anything.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            return Outcome {
                code,
                report: None,
                message: e.render().to_string(),
                json: false,
            };
        }
    };
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            report.elapsed_ms = start.elapsed().as_millis();
            let code = if report.passed() {
                EXIT_PASS
            } else {
                EXIT_FAIL
            };
            Outcome {
                code,
                report: Some(report),
                message: String::new(),
                json: cli.json,
            }
        }
        Err(err) => {
            let mut message = format!("error: {err}\n");
            if let Error::Precision { required, .. } = &err {
                message.push_str(&format!("rerun with --digits {required} or more\n"));
            }
            Outcome {
                code: exit_code(&err),
                report: None,
                message,
                json: cli.json,
            }
        }
    }
}

/// [`execute`] followed by printing: with `--json` the report goes to
/// stdout as JSON and the table to stderr, otherwise the table to stdout.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let outcome = execute(args);
    match &outcome.report {
        Some(report) if outcome.json => {
            println!("{}", report.to_json());
            eprint!("{}", report.to_table());
        }
        Some(report) => print!("{}", report.to_table()),
        None if outcome.code == EXIT_PASS => print!("{}", outcome.message),
        None => eprint!("{}", outcome.message),
    }
    outcome.code
}

/// Runs a parsed command.
pub fn run(cli: &Cli) -> crate::Result<RunReport> {
    let ctx = crate::PrecisionContext::new(cli.digits)?;
    commands::dispatch(&cli.command, &ctx)
}
