//! The `polycert` command line.
//!
//! Exit codes: 0 certified, 2 condition fails, 3 boundary case, 1 input
//! error, 4 internal inconsistency (a certificate contradicted by the root
//! oracle, or an extremal construction failing its own check). A batch
//! reports the most serious code among its lines, in the order
//! 4, 1, 2, 3, 0.

mod certify;
mod extremal;
mod input;
mod roots;
mod sweep;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::certify::Verdict;
use crate::extremal::DEFAULT_PRECISION;
pub use input::{parse_batch, parse_line, InputLine, Parsed};

pub const EXIT_CERTIFIED: i32 = 0;
pub const EXIT_INPUT_ERROR: i32 = 1;
pub const EXIT_CONDITION_FAILS: i32 = 2;
pub const EXIT_BOUNDARY: i32 = 3;
pub const EXIT_INCONSISTENT: i32 = 4;

pub fn verdict_exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::CertifiedPositive
        | Verdict::CertifiedOneRealZero
        | Verdict::CertifiedAllRealZeros => EXIT_CERTIFIED,
        Verdict::ConditionFails => EXIT_CONDITION_FAILS,
        Verdict::BoundaryCase => EXIT_BOUNDARY,
    }
}

/// Most serious of several exit codes.
pub fn combine_exit_codes(codes: impl IntoIterator<Item = i32>) -> i32 {
    let rank = |c: i32| match c {
        EXIT_INCONSISTENT => 4,
        EXIT_INPUT_ERROR => 3,
        EXIT_CONDITION_FAILS => 2,
        EXIT_BOUNDARY => 1,
        _ => 0,
    };
    codes
        .into_iter()
        .max_by_key(|c| rank(*c))
        .unwrap_or(EXIT_CERTIFIED)
}

#[derive(Parser, Debug)]
#[command(
    name = "polycert",
    version,
    about = "Exact positivity certificates for polynomials with positive coefficients"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a ratio condition on each polynomial.
    Check(CheckArgs),
    /// Even-degree certificate with threshold, minors and a root-count cross-check.
    Certify(InputArgs),
    /// Print a boundary polynomial and verify its ratios.
    Extremal(ExtremalArgs),
    /// Count real roots exactly.
    Roots(InputArgs),
    /// Perturb the boundary polynomial and record verdicts and root counts.
    Sweep(SweepArgs),
    /// Run the built-in invariant batteries.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Coefficients, constant term first: "1, 3/2, 1".
    #[arg(
        long,
        conflicts_with = "file",
        required_unless_present = "file",
        allow_hyphen_values = true
    )]
    pub coeffs: Option<String>,
    /// One coefficient list per line; `-` for stdin.
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = ConditionArg::Auto)]
    pub condition: ConditionArg,
}

#[derive(Args, Debug)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub n: usize,
    /// Odd-degree family (degree 2n + 1).
    #[arg(long)]
    pub odd: bool,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
    /// Fractional digits of decimal coefficients.
    #[arg(long, env = "POLYCERT_PRECISION", default_value_t = DEFAULT_PRECISION)]
    pub precision: u32,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    pub n: usize,
    /// Values of epsilon in (-1, 1), comma-separated.
    #[arg(
        long,
        default_value = "1/2, 1/10, 1/100, 0",
        allow_hyphen_values = true
    )]
    pub epsilons: String,
    /// Additional epsilons drawn uniformly from (-1, 1).
    #[arg(long, default_value_t = 0)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<FaultArg>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConditionArg {
    Even,
    Odd,
    Hutchinson,
    /// Even condition for even degree, odd condition for odd degree.
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// Exact when every coefficient is rational, numeric otherwise.
    Auto,
    Exact,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    CorruptThresholdTable,
}

/// A command's rendered output and exit code.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn input_error(message: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code: EXIT_INPUT_ERROR,
        }
    }
}

/// Lines to process for `--coeffs` / `--file`.
fn gather(args: &InputArgs) -> Result<Vec<InputLine>, String> {
    match (&args.coeffs, &args.file) {
        (Some(text), _) => Ok(vec![parse_line(1, text)]),
        (None, Some(path)) => input::read_source(path)
            .map(|content| parse_batch(&content))
            .map_err(|e| format!("cannot read {}: {e}", path.display())),
        (None, None) => Err("either --coeffs or --file is required".into()),
    }
}

pub fn execute(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check(args) => match gather(&args.input) {
            Ok(lines) => certify::run_check(
                &lines,
                args.condition,
                args.input.format,
                args.input.file.is_some(),
            ),
            Err(e) => Outcome::input_error(e),
        },
        Command::Certify(args) => match gather(&args) {
            Ok(lines) => certify::run_certify(&lines, args.format, args.file.is_some()),
            Err(e) => Outcome::input_error(e),
        },
        Command::Roots(args) => match gather(&args) {
            Ok(lines) => roots::run(&lines, args.format, args.file.is_some()),
            Err(e) => Outcome::input_error(e),
        },
        Command::Extremal(args) => extremal::run(&args),
        Command::Sweep(args) => sweep::run(&args),
        Command::Selftest(args) => sweep::run_selftest(&args),
    }
}

/// Parse arguments, run, print. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = execute(cli);
    let _ = io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = io::stderr().write_all(outcome.stderr.as_bytes());
    outcome.code
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn json_string(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_priority() {
        assert_eq!(combine_exit_codes([0, 3, 2]), 2);
        assert_eq!(combine_exit_codes([0, 1, 2]), 1);
        assert_eq!(combine_exit_codes([4, 1]), 4);
        assert_eq!(combine_exit_codes([3, 0]), 3);
        assert_eq!(combine_exit_codes([]), 0);
    }

    #[test]
    fn arguments_parse() {
        Cli::try_parse_from([
            "polycert",
            "check",
            "--coeffs",
            "1,1,1",
            "--condition",
            "even",
        ])
        .unwrap();
        Cli::try_parse_from(["polycert", "sweep", "--n", "2", "--epsilons", "-1/10,0"]).unwrap();
        assert!(Cli::try_parse_from(["polycert", "check"]).is_err());
        assert!(
            Cli::try_parse_from(["polycert", "check", "--coeffs", "1", "--file", "x"]).is_err()
        );
    }
}
