//! `extremal`.

use std::fmt::Write as _;

use serde_json::{json, Value};

use super::{
    csv_string, json_string, ExtremalArgs, Format, ModeArg, Outcome, EXIT_CERTIFIED,
    EXIT_INCONSISTENT,
};
use crate::error::Result;
use crate::extremal::{
    even_extremal, odd_extremal, verify_extremal_ratios, Extremal, ExtremalMode,
    Parity,
};
use crate::root_oracle::{count_real_roots, RootCount};

pub const EXTREMAL_CSV_HEADER: [&str; 6] = ["n", "family", "mode", "kind", "index", "value"];

fn build(n: usize, odd: bool, mode: ExtremalMode) -> Result<Box<dyn Extremal>> {
    Ok(if odd {
        Box::new(odd_extremal(n, mode)?)
    } else {
        Box::new(even_extremal(n, mode)?)
    })
}

/// Which rational polynomial the oracle looked at.
fn oracle_input_label(e: &dyn Extremal) -> &'static str {
    if e.rational_coefficients().is_some() {
        "exact"
    } else if e.exact_rational().is_some() {
        "exact, divided by the constant term"
    } else {
        "sine products rounded to 50 digits"
    }
}

struct Summary {
    e: Box<dyn Extremal>,
    coefficients: Vec<String>,
    verified: bool,
    oracle: RootCount,
}

impl Summary {
    fn family(&self) -> &'static str {
        match self.e.parity() {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }

    fn mode_label(&self) -> &'static str {
        match self.e.mode() {
            ExtremalMode::Exact => "exact",
            ExtremalMode::Numeric(_) => "numeric",
        }
    }

    /// Tolerance exponent of the numeric ratio check.
    fn tolerance_digits(&self) -> Option<u32> {
        match self.e.mode() {
            ExtremalMode::Exact => None,
            ExtremalMode::Numeric(p) => Some(p.saturating_sub(10)),
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "n": self.e.n(),
            "family": self.family(),
            "degree": self.e.degree(),
            "alpha": format!("pi/{}", self.e.alpha().1),
            "mode": self.mode_label(),
            "precision": match self.e.mode() {
                ExtremalMode::Numeric(p) => Some(p),
                ExtremalMode::Exact => None,
            },
            "coefficients": self.coefficients,
            "exact": serde_json::to_value(self.e.exact_json()).expect("serializable"),
            "ratios_verified": self.verified,
            "tolerance": self.tolerance_digits().map(|d| format!("1e-{d}")),
            "oracle": serde_json::to_value(&self.oracle).expect("serializable"),
            "oracle_input": oracle_input_label(self.e.as_ref()),
        })
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let row = |kind: &str, index: String, value: String| {
            vec![
                self.e.n().to_string(),
                self.family().to_string(),
                self.mode_label().to_string(),
                kind.to_string(),
                index,
                value,
            ]
        };
        let mut rows: Vec<Vec<String>> = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| row("coefficient", i.to_string(), c.clone()))
            .collect();
        rows.push(row(
            "ratios_verified",
            String::new(),
            self.verified.to_string(),
        ));
        rows.push(row(
            "oracle_distinct",
            String::new(),
            self.oracle.distinct.to_string(),
        ));
        rows.push(row(
            "oracle_with_multiplicity",
            String::new(),
            self.oracle.with_multiplicity.to_string(),
        ));
        rows
    }

    fn human(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{} boundary polynomial, n = {}, degree {}, alpha = pi/{}",
            self.family(),
            self.e.n(),
            self.e.degree(),
            self.e.alpha().1
        )
        .unwrap();
        if self.mode_label() == "exact" && self.e.rational_coefficients().is_none() {
            for (i, c) in self.coefficients.iter().enumerate() {
                writeln!(out, "  a_{i} = {c}").unwrap();
            }
        } else {
            writeln!(out, "coefficients: {}", self.coefficients.join(", ")).unwrap();
        }
        let target = match self.e.parity() {
            Parity::Even => "1/cos^2(alpha)",
            Parity::Odd => "(4k^2-1)/(4k^2) * 1/cos^2(alpha)",
        };
        let how = match self.tolerance_digits() {
            None => "exactly".to_string(),
            Some(d) => format!("within 1e-{d}"),
        };
        if self.verified {
            writeln!(out, "ratios: all equal to {target} ({how})").unwrap();
        } else {
            writeln!(out, "ratios: CHECK FAILED against {target} ({how})").unwrap();
        }
        writeln!(
            out,
            "oracle ({}): {} distinct real root(s), {} with multiplicity",
            oracle_input_label(self.e.as_ref()),
            self.oracle.distinct,
            self.oracle.with_multiplicity
        )
        .unwrap();
        out
    }
}

fn summarize(args: &ExtremalArgs) -> Result<Summary> {
    let e = match args.mode {
        ModeArg::Exact => build(args.n, args.odd, ExtremalMode::Exact)?,
        ModeArg::Numeric => build(args.n, args.odd, ExtremalMode::Numeric(args.precision))?,
        ModeArg::Auto => {
            let exact = build(args.n, args.odd, ExtremalMode::Exact)?;
            if exact.rational_coefficients().is_some() {
                exact
            } else {
                build(args.n, args.odd, ExtremalMode::Numeric(args.precision))?
            }
        }
    };
    let coefficients = match (e.mode(), e.rational_coefficients()) {
        (ExtremalMode::Exact, Some(q)) => q.iter().map(ToString::to_string).collect(),
        (ExtremalMode::Exact, None) => e.coeffs_exact().iter().map(ToString::to_string).collect(),
        (ExtremalMode::Numeric(_), _) => {
            e.coeffs_numeric().iter().map(ToString::to_string).collect()
        }
    };
    let verified = verify_extremal_ratios(e.as_ref());
    let oracle = count_real_roots(&e.rational_companion())?;
    Ok(Summary {
        e,
        coefficients,
        verified,
        oracle,
    })
}

pub fn run(args: &ExtremalArgs) -> Outcome {
    let summary = match summarize(args) {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e),
    };
    let stdout = match args.format {
        Format::Json => json_string(&summary.to_json()),
        Format::Csv => csv_string(&EXTREMAL_CSV_HEADER, summary.rows()),
        Format::Human => summary.human(),
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: if summary.verified {
            EXIT_CERTIFIED
        } else {
            EXIT_INCONSISTENT
        },
    }
}
