//! `roots`.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{
    combine_exit_codes, csv_string, json_string, Format, InputLine, Outcome, EXIT_CERTIFIED,
    EXIT_INPUT_ERROR,
};
use crate::root_oracle::{count_real_roots, RootCount};

pub const ROOTS_CSV_HEADER: [&str; 6] =
    ["line", "distinct", "with_multiplicity", "root", "lo", "hi"];

pub fn run(lines: &[InputLine], format: Format, batch: bool) -> Outcome {
    let entries: Vec<(&InputLine, Result<RootCount, String>)> = lines
        .par_iter()
        .map(|input| {
            let r = input
                .parsed
                .clone()
                .and_then(|p| count_real_roots(&p.polynomial).map_err(|e| e.to_string()));
            (input, r)
        })
        .collect();
    let code = combine_exit_codes(entries.iter().map(|(_, r)| {
        if r.is_ok() {
            EXIT_CERTIFIED
        } else {
            EXIT_INPUT_ERROR
        }
    }));
    let mut stderr = String::new();
    for (input, r) in &entries {
        if let Err(msg) = r {
            writeln!(stderr, "line {}: {msg}", input.line).unwrap();
        }
    }
    let stdout = match format {
        Format::Json => {
            let to_value = |r: &RootCount| serde_json::to_value(r).expect("root count serializes");
            if batch {
                let values: Vec<Value> = entries
                    .iter()
                    .map(|(input, r)| match r {
                        Ok(c) => {
                            json!({"line": input.line, "input": input.text, "roots": to_value(c)})
                        }
                        Err(msg) => json!({"line": input.line, "input": input.text, "error": msg}),
                    })
                    .collect();
                json_string(&Value::Array(values))
            } else {
                entries[0]
                    .1
                    .as_ref()
                    .map(|c| json_string(&to_value(c)))
                    .unwrap_or_default()
            }
        }
        Format::Csv => csv_string(
            &ROOTS_CSV_HEADER,
            entries.iter().flat_map(|(input, r)| {
                let line = input.line.to_string();
                match r {
                    Err(_) => vec![vec![
                        line,
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                    ]],
                    Ok(c) if c.isolating_intervals.is_empty() => vec![vec![
                        line,
                        c.distinct.to_string(),
                        c.with_multiplicity.to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                    ]],
                    Ok(c) => c
                        .isolating_intervals
                        .iter()
                        .enumerate()
                        .map(|(i, (lo, hi))| {
                            vec![
                                line.clone(),
                                c.distinct.to_string(),
                                c.with_multiplicity.to_string(),
                                (i + 1).to_string(),
                                lo.to_string(),
                                hi.to_string(),
                            ]
                        })
                        .collect(),
                }
            }),
        ),
        Format::Human => {
            let mut out = String::new();
            for (input, r) in &entries {
                writeln!(out, "line {}: {}", input.line, input.text).unwrap();
                match r {
                    Ok(c) => {
                        writeln!(
                            out,
                            "  {} distinct real root(s), {} with multiplicity",
                            c.distinct, c.with_multiplicity
                        )
                        .unwrap();
                        for (lo, hi) in &c.isolating_intervals {
                            writeln!(out, "  root in ({lo}, {hi}]").unwrap();
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
