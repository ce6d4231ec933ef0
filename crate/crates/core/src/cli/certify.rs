//! `check` and `certify`.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{
    combine_exit_codes, csv_string, json_string, verdict_exit_code, ConditionArg, Format,
    InputLine, Outcome, Parsed, EXIT_INCONSISTENT, EXIT_INPUT_ERROR,
};
use crate::certify::{check, threshold, AlgebraicThreshold, CertificateReport, Condition, Verdict};
use crate::error::Error;
use crate::poly_core::rational::to_decimal_string;
use crate::root_oracle::{count_real_roots, RootCount};

/// Digits of the labeled threshold approximation in human output.
const APPROXIMATION_DIGITS: u32 = 30;

pub const CHECK_CSV_HEADER: [&str; 8] = [
    "line",
    "degree",
    "condition",
    "verdict",
    "kind",
    "index",
    "value",
    "relation",
];

fn pick_condition(arg: ConditionArg, degree: usize) -> Condition {
    match arg {
        ConditionArg::Even => Condition::Even,
        ConditionArg::Odd => Condition::Odd,
        ConditionArg::Hutchinson => Condition::Hutchinson,
        ConditionArg::Auto if degree.is_multiple_of(2) => Condition::Even,
        ConditionArg::Auto => Condition::Odd,
    }
}

fn explain(e: Error, condition: Condition) -> String {
    match e {
        Error::EvenDegreeRequired(_) | Error::OddDegreeRequired(_) => {
            let hint = if condition == Condition::Even {
                "odd"
            } else {
                "even"
            };
            format!("{e}: condition {condition} does not apply; try --condition {hint} or auto")
        }
        other => other.to_string(),
    }
}

fn run_one(parsed: &Parsed, arg: ConditionArg) -> Result<CertificateReport, String> {
    let p = &parsed.polynomial;
    let condition = pick_condition(arg, p.degree());
    if let (Some(idx), None) = (parsed.dropped_zero(), p.first_nonpositive()) {
        return Err(Error::NonPositiveCoefficient(idx).to_string());
    }
    check(p, condition).map_err(|e| explain(e, condition))
}

/// `(n, threshold)` governing a report, if there is one.
fn governing_threshold(report: &CertificateReport) -> Option<AlgebraicThreshold> {
    match report.condition {
        Condition::Hutchinson => None,
        _ if report.degree < 2 => None,
        _ => threshold(report.degree / 2).ok(),
    }
}

fn threshold_json(t: &AlgebraicThreshold) -> Value {
    let (lo, hi) = t.isolating_interval();
    json!({
        "n": t.n(),
        "description": t.describe(),
        "exact": t.rational_value().map(|q| q.to_string()),
        "c_interval": [lo.to_string(), hi.to_string()],
        "approximation": to_decimal_string(&t.approximate(APPROXIMATION_DIGITS + 5), APPROXIMATION_DIGITS),
    })
}

fn report_json(report: &CertificateReport) -> Value {
    serde_json::to_value(report).expect("report serializes")
}

fn report_rows(line: usize, report: &CertificateReport) -> Vec<Vec<String>> {
    let head = |kind: &str, index: String, value: String, relation: String| {
        vec![
            line.to_string(),
            report.degree.to_string(),
            report.condition.to_string(),
            report.verdict.to_string(),
            kind.to_string(),
            index,
            value,
            relation,
        ]
    };
    let mut rows = vec![head("summary", String::new(), String::new(), String::new())];
    for c in &report.comparisons {
        rows.push(head(
            "ratio",
            c.k.to_string(),
            c.ratio.to_string(),
            c.relation.to_string(),
        ));
    }
    for (j, m) in report.minors.iter().enumerate() {
        rows.push(head(
            "minor",
            (j + 1).to_string(),
            m.to_string(),
            String::new(),
        ));
    }
    rows
}

fn error_row(line: usize, message: &str) -> Vec<String> {
    let mut row = vec![String::new(); 8];
    row[0] = line.to_string();
    row[4] = "error".into();
    row[6] = message.to_string();
    row
}

fn human_report(out: &mut String, report: &CertificateReport) {
    writeln!(
        out,
        "  condition: {} (degree {})",
        report.condition, report.degree
    )
    .unwrap();
    match report.condition {
        Condition::Hutchinson => writeln!(
            out,
            "  threshold: 4 (every ratio a_k^2/(a_(k-1) a_(k+1)) must be >= 4)"
        )
        .unwrap(),
        _ => {
            if let Some(t) = governing_threshold(report) {
                writeln!(out, "  threshold: {}", t.describe()).unwrap();
                writeln!(
                    out,
                    "  threshold approximation ({APPROXIMATION_DIGITS} digits): {}",
                    to_decimal_string(
                        &t.approximate(APPROXIMATION_DIGITS + 5),
                        APPROXIMATION_DIGITS
                    )
                )
                .unwrap();
                if report.condition == Condition::Odd {
                    writeln!(
                        out,
                        "  (index k compares against (4k^2-1)/(4k^2) times the threshold)"
                    )
                    .unwrap();
                }
            }
        }
    }
    for c in &report.comparisons {
        writeln!(out, "  ratio k={}: {} ({})", c.k, c.ratio, c.relation).unwrap();
    }
    if !report.minors.is_empty() {
        let minors: Vec<String> = report.minors.iter().map(ToString::to_string).collect();
        writeln!(out, "  leading minors: {}", minors.join(", ")).unwrap();
    }
    writeln!(out, "  verdict: {}", report.verdict).unwrap();
}

struct CheckEntry<'a> {
    input: &'a InputLine,
    outcome: Result<CertificateReport, String>,
}

impl CheckEntry<'_> {
    fn code(&self) -> i32 {
        match &self.outcome {
            Ok(r) => verdict_exit_code(r.verdict),
            Err(_) => EXIT_INPUT_ERROR,
        }
    }
}

pub fn run_check(lines: &[InputLine], arg: ConditionArg, format: Format, batch: bool) -> Outcome {
    let entries: Vec<CheckEntry> = lines
        .par_iter()
        .map(|input| CheckEntry {
            input,
            outcome: input.parsed.clone().and_then(|p| run_one(&p, arg)),
        })
        .collect();
    let code = combine_exit_codes(entries.iter().map(CheckEntry::code));
    let mut stderr = String::new();
    for e in &entries {
        if let Err(msg) = &e.outcome {
            writeln!(stderr, "line {}: {msg}", e.input.line).unwrap();
        }
    }
    let stdout = match format {
        Format::Json => {
            let values: Vec<Value> = entries
                .iter()
                .map(|e| match &e.outcome {
                    Ok(r) if !batch => report_json(r),
                    Ok(r) => json!({"line": e.input.line, "input": e.input.text, "report": report_json(r)}),
                    Err(msg) => json!({"line": e.input.line, "input": e.input.text, "error": msg}),
                })
                .collect();
            if batch {
                json_string(&Value::Array(values))
            } else {
                match &entries[0].outcome {
                    Ok(_) => json_string(&values[0]),
                    Err(_) => String::new(),
                }
            }
        }
        Format::Csv => csv_string(
            &CHECK_CSV_HEADER,
            entries.iter().flat_map(|e| match &e.outcome {
                Ok(r) => report_rows(e.input.line, r),
                Err(msg) => vec![error_row(e.input.line, msg)],
            }),
        ),
        Format::Human => {
            let mut out = String::new();
            for e in &entries {
                writeln!(out, "line {}: {}", e.input.line, e.input.text).unwrap();
                match &e.outcome {
                    Ok(r) => human_report(&mut out, r),
                    Err(msg) => writeln!(out, "  error: {msg}").unwrap(),
                }
            }
            out
        }
    };
    Outcome {
        stdout,
        stderr,
        code,
    }
}

struct Certified {
    report: CertificateReport,
    threshold: Option<AlgebraicThreshold>,
    oracle: RootCount,
}

impl Certified {
    /// A positivity claim contradicted by an actual real root.
    fn soundness_violation(&self) -> bool {
        self.report.verdict == Verdict::CertifiedPositive && self.oracle.distinct > 0
    }

    fn to_json(&self) -> Value {
        json!({
            "report": report_json(&self.report),
            "threshold": self.threshold.as_ref().map(threshold_json),
            "oracle": serde_json::to_value(&self.oracle).expect("root count serializes"),
            "soundness_violation": self.soundness_violation(),
        })
    }

    fn rows(&self, line: usize) -> Vec<Vec<String>> {
        let mut rows = report_rows(line, &self.report);
        let template = rows[0].clone();
        let mut push = |kind: &str, index: String, value: String| {
            let mut row = template.clone();
            row[4] = kind.into();
            row[5] = index;
            row[6] = value;
            rows.push(row);
        };
        if let Some(t) = &self.threshold {
            let (lo, hi) = t.isolating_interval();
            if let Some(q) = t.rational_value() {
                push("threshold_exact", t.n().to_string(), q.to_string());
            }
            push("c_interval_lo", t.n().to_string(), lo.to_string());
            push("c_interval_hi", t.n().to_string(), hi.to_string());
        }
        push(
            "oracle_distinct",
            String::new(),
            self.oracle.distinct.to_string(),
        );
        push(
            "oracle_with_multiplicity",
            String::new(),
            self.oracle.with_multiplicity.to_string(),
        );
        for (i, (lo, hi)) in self.oracle.isolating_intervals.iter().enumerate() {
            push("root_interval_lo", (i + 1).to_string(), lo.to_string());
            push("root_interval_hi", (i + 1).to_string(), hi.to_string());
        }
        push(
            "soundness_violation",
            String::new(),
            self.soundness_violation().to_string(),
        );
        rows
    }
}

fn certify_one(parsed: &Parsed) -> Result<Certified, String> {
    let report = run_one(parsed, ConditionArg::Even)?;
    let oracle = count_real_roots(&parsed.polynomial).map_err(|e| e.to_string())?;
    Ok(Certified {
        threshold: governing_threshold(&report),
        report,
        oracle,
    })
}

pub fn run_certify(lines: &[InputLine], format: Format, batch: bool) -> Outcome {
    let entries: Vec<(&InputLine, Result<Certified, String>)> = lines
        .par_iter()
        .map(|input| (input, input.parsed.clone().and_then(|p| certify_one(&p))))
        .collect();
    let code = combine_exit_codes(entries.iter().map(|(_, r)| match r {
        Ok(c) if c.soundness_violation() => EXIT_INCONSISTENT,
        Ok(c) => verdict_exit_code(c.report.verdict),
        Err(_) => EXIT_INPUT_ERROR,
    }));
    let mut stderr = String::new();
    for (input, r) in &entries {
        match r {
            Err(msg) => writeln!(stderr, "line {}: {msg}", input.line).unwrap(),
            Ok(c) if c.soundness_violation() => writeln!(
                stderr,
                "line {}: soundness violation: certified positive but the oracle found {} real root(s)",
                input.line, c.oracle.distinct
            )
            .unwrap(),
            Ok(_) => {}
        }
    }
    let stdout = match format {
        Format::Json => {
            if batch {
                let values: Vec<Value> = entries
                    .iter()
                    .map(|(input, r)| {
                        let mut v = match r {
                            Ok(c) => c.to_json(),
                            Err(msg) => json!({"error": msg}),
                        };
                        v["line"] = json!(input.line);
                        v["input"] = json!(input.text);
                        v
                    })
                    .collect();
                json_string(&Value::Array(values))
            } else {
                match &entries[0].1 {
                    Ok(c) => json_string(&c.to_json()),
                    Err(_) => String::new(),
                }
            }
        }
        Format::Csv => csv_string(
            &CHECK_CSV_HEADER,
            entries.iter().flat_map(|(input, r)| match r {
                Ok(c) => c.rows(input.line),
                Err(msg) => vec![error_row(input.line, msg)],
            }),
        ),
        Format::Human => {
            let mut out = String::new();
            for (input, r) in &entries {
                writeln!(out, "line {}: {}", input.line, input.text).unwrap();
                match r {
                    Ok(c) => {
                        human_report(&mut out, &c.report);
                        if let Some(t) = &c.threshold {
                            let (lo, hi) = t.isolating_interval();
                            writeln!(out, "  c = 2cos(pi/{}) in [{lo}, {hi}]", t.n() + 2).unwrap();
                        }
                        writeln!(
                            out,
                            "  oracle: {} distinct real root(s), {} with multiplicity",
                            c.oracle.distinct, c.oracle.with_multiplicity
                        )
                        .unwrap();
                        for (lo, hi) in &c.oracle.isolating_intervals {
                            writeln!(out, "    root in ({lo}, {hi}]").unwrap();
                        }
                        if c.soundness_violation() {
                            writeln!(out, "  SOUNDNESS VIOLATION").unwrap();
                        }
                    }
                    Err(msg) => writeln!(out, "  error: {msg}").unwrap(),
                }
            }
            out
        }
    };
    Outcome {
        stdout,
        stderr,
        code,
    }
}
