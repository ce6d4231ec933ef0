//! `sweep` and `selftest`.

use std::fmt::Write as _;

use super::{
    csv_string, json_string, FaultArg, Format, Outcome, SelftestArgs, SweepArgs, EXIT_CERTIFIED,
    EXIT_INPUT_ERROR,
};
use crate::poly_core::{parse_rational, Rational};
use crate::selftest::{self, Fault};
use crate::sweep::{sampled_epsilons, sweep, SWEEP_CSV_HEADER};

fn parse_epsilons(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_rational(t).map_err(|e| format!("epsilon {t:?}: {e}")))
        .collect()
}

pub fn run(args: &SweepArgs) -> Outcome {
    let mut epsilons = match parse_epsilons(&args.epsilons) {
        Ok(v) => v,
        Err(e) => return Outcome::input_error(e),
    };
    epsilons.extend(sampled_epsilons(args.count, args.seed));
    let rows = match sweep(args.n, &epsilons) {
        Ok(rows) => rows,
        Err(e) => return Outcome::input_error(e),
    };
    let stdout = match args.format {
        Format::Csv => csv_string(
            &SWEEP_CSV_HEADER,
            rows.iter().map(|r| r.csv_record().to_vec()),
        ),
        Format::Json => json_string(&serde_json::to_value(&rows).expect("rows serialize")),
        Format::Human => {
            let mut out = String::new();
            for r in &rows {
                writeln!(
                    out,
                    "n = {}, eps = {}: {}, {} distinct real root(s), {} with multiplicity",
                    r.n, r.epsilon, r.verdict, r.distinct, r.with_multiplicity
                )
                .unwrap();
            }
            out
        }
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: EXIT_CERTIFIED,
    }
}

pub fn run_selftest(args: &SelftestArgs) -> Outcome {
    let fault = args.inject_fault.map(|f| match f {
        FaultArg::CorruptThresholdTable => Fault::CorruptThresholdTable,
    });
    match selftest::run(args.seed, fault) {
        Ok(report) => Outcome {
            stdout: report.render(),
            stderr: String::new(),
            code: if report.passed() {
                EXIT_CERTIFIED
            } else {
                EXIT_INPUT_ERROR
            },
        },
        Err(e) => Outcome::input_error(e),
    }
}
