use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn polycert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycert"))
        .args(args)
        .env_remove("POLYCERT_PRECISION")
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_polycert"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", stdout(o)))
}

fn csv_rows(o: &Output) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.unwrap().iter().map(String::from).collect())
        .collect();
    (header, rows)
}

#[test]
fn check_examples() {
    let cases: [(&str, &str, &str, i32); 8] = [
        ("1,1,1", "even", "CertifiedPositive", 0),
        ("1,1,1,1", "odd", "CertifiedOneRealZero", 0),
        ("1,2,1", "hutchinson", "CertifiedAllRealZeros", 0),
        ("1,3,1", "even", "ConditionFails", 2),
        ("1,2,1", "even", "BoundaryCase", 3),
        ("3/4, 3/2, 3/4", "auto", "BoundaryCase", 3),
        ("1,1,1,1", "auto", "CertifiedOneRealZero", 0),
        ("1, 2, 2, 2, 1", "even", "BoundaryCase", 3),
    ];
    for (coeffs, condition, verdict, exit) in cases {
        let o = polycert(&[
            "check",
            "--coeffs",
            coeffs,
            "--condition",
            condition,
            "--format",
            "json",
        ]);
        assert_eq!(code(&o), exit, "{coeffs} / {condition}");
        assert_eq!(json(&o)["verdict"], verdict, "{coeffs} / {condition}");
    }
}

#[test]
fn exit_code_depends_only_on_verdict() {
    let inputs = [
        "1,1,1",
        "1,2,1",
        "1,3,1",
        "1,10,1,10,1",
        "3/4,3/2,3/4",
        "1,1,1,1,1",
        "2,1,2,1,2,1,2",
    ];
    for input in inputs {
        for format in ["json", "csv", "human"] {
            let o = polycert(&["check", "--coeffs", input, "--format", format]);
            let j = json(&polycert(&["check", "--coeffs", input, "--format", "json"]));
            let expected = match j["verdict"].as_str().unwrap() {
                "CertifiedPositive" | "CertifiedOneRealZero" | "CertifiedAllRealZeros" => 0,
                "ConditionFails" => 2,
                "BoundaryCase" => 3,
                other => panic!("unknown verdict {other}"),
            };
            assert_eq!(code(&o), expected, "{input} as {format}");
        }
    }
}

#[test]
fn input_errors_exit_one() {
    let parity = polycert(&["check", "--coeffs", "1,1,1,1", "--condition", "even"]);
    assert_eq!(code(&parity), 1);
    assert!(String::from_utf8_lossy(&parity.stderr).contains("even degree required"));
    for bad in ["1,x,1", "1,0,1", "1,-1,1", "1/0,1,1", ""] {
        let o = polycert(&["check", "--coeffs", bad]);
        assert_eq!(code(&o), 1, "{bad:?}");
    }
    assert_eq!(code(&polycert(&["check"])), 1);
    assert_eq!(
        code(&polycert(&[
            "check",
            "--coeffs",
            "1,1,1",
            "--condition",
            "sideways"
        ])),
        1
    );
    assert_eq!(
        code(&polycert(&["roots", "--file", "/nonexistent/polys.txt"])),
        1
    );
}

#[test]
fn certify_examples() {
    let o = polycert(&["certify", "--coeffs", "1,1,1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let j = json(&o);
    assert_eq!(j["report"]["minors"], serde_json::json!(["1", "3/4"]));
    assert_eq!(j["oracle"]["distinct"], 0);
    assert_eq!(j["threshold"]["exact"], "4");

    let o = polycert(&["certify", "--coeffs", "3/4,3/2,3/4", "--format", "json"]);
    assert_eq!(code(&o), 3);
    let j = json(&o);
    assert_eq!(j["report"]["verdict"], "BoundaryCase");
    assert_eq!(j["report"]["minors"][1], "0");
    assert_eq!(j["oracle"]["distinct"], 1);

    let o = polycert(&["certify", "--coeffs", "1,10,1,10,1", "--format", "json"]);
    assert_eq!(code(&o), 2);
    let j = json(&o);
    assert_eq!(j["report"]["verdict"], "ConditionFails");
    assert!(j["oracle"]["distinct"].as_u64().unwrap() >= 1);
    assert_eq!(j["soundness_violation"], false);

    // Irrational threshold: described by its isolating interval.
    let o = polycert(&["certify", "--coeffs", "1,1,1,1,1,1,1", "--format", "json"]);
    let j = json(&o);
    assert_eq!(j["threshold"]["n"], 3);
    assert!(j["threshold"]["exact"].is_null());
    assert!(j["threshold"]["description"]
        .as_str()
        .unwrap()
        .contains("largest root"));
}

#[test]
fn human_output_labels_the_approximation() {
    let o = polycert(&["certify", "--coeffs", "1,1,1,1,1,1,1"]);
    let text = stdout(&o);
    assert!(text.contains("approximation (30 digits)"), "{text}");
    assert!(text.contains("CertifiedPositive"));
}

#[test]
fn extremal_examples() {
    let o = polycert(&["extremal", "--n", "1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("3/4, 3/2, 3/4"), "{text}");
    assert!(text.contains("ratios: all equal"), "{text}");

    let o = polycert(&["extremal", "--n", "1", "--odd"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("1/4, 3/4, 3/4, 1/4"));

    let o = polycert(&[
        "extremal",
        "--n",
        "12",
        "--precision",
        "80",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let j = json(&o);
    let coeffs = j["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 25);
    assert!(coeffs.iter().all(|c| {
        let s = c.as_str().unwrap();
        !s.starts_with('-') && !s.trim_start_matches(['0', '.']).is_empty()
    }));
    assert_eq!(j["ratios_verified"], true);
    assert_eq!(j["tolerance"], "1e-70");
    assert!(j["oracle"]["with_multiplicity"].as_u64().unwrap() >= 2);
}

#[test]
fn extremal_modes_and_precision() {
    let exact = json(&polycert(&[
        "extremal", "--n", "3", "--mode", "exact", "--format", "json",
    ]));
    assert_eq!(exact["mode"], "exact");
    assert_eq!(exact["ratios_verified"], true);
    assert_eq!(exact["exact"]["basis"], "cos(j*pi/(n+2))");

    let env = Command::new(env!("CARGO_BIN_EXE_polycert"))
        .args(["extremal", "--n", "3", "--format", "json"])
        .env("POLYCERT_PRECISION", "40")
        .output()
        .unwrap();
    let j = json(&env);
    assert_eq!(j["precision"], 40);
    let digits = j["coefficients"][0]
        .as_str()
        .unwrap()
        .split('.')
        .nth(1)
        .unwrap()
        .len();
    assert_eq!(digits, 40);

    assert_eq!(code(&polycert(&["extremal", "--n", "0"])), 1);
    assert_eq!(
        code(&polycert(&["extremal", "--n", "3", "--precision", "10"])),
        1
    );
}

#[test]
fn sweep_examples() {
    let o = polycert(&["sweep", "--n", "2", "--epsilons", "1/10,0,-1/10"]);
    assert_eq!(code(&o), 0);
    let (header, rows) = csv_rows(&o);
    assert_eq!(
        header,
        ["n", "epsilon", "verdict", "distinct", "with_multiplicity"]
    );
    assert_eq!(rows[0][2..4], ["CertifiedPositive", "0"]);
    assert_eq!(rows[1][2], "BoundaryCase");
    assert!(rows[1][3].parse::<u32>().unwrap() >= 1);
    assert_eq!(rows[2][1], "-1/10");
    assert_eq!(rows[2][2], "ConditionFails");

    assert_eq!(
        code(&polycert(&["sweep", "--n", "2", "--epsilons", "1"])),
        1
    );
    assert_eq!(
        code(&polycert(&["sweep", "--n", "2", "--epsilons", "-3/2"])),
        1
    );
    assert_eq!(code(&polycert(&["sweep", "--n", "0"])), 1);
}

#[test]
fn seeded_runs_are_reproducible() {
    let args = [
        "sweep",
        "--n",
        "2",
        "--epsilons",
        "",
        "--count",
        "6",
        "--seed",
        "11",
    ];
    let a = polycert(&args);
    let b = polycert(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(csv_rows(&a).1.len(), 6);
    let c = polycert(&[
        "sweep",
        "--n",
        "2",
        "--epsilons",
        "",
        "--count",
        "6",
        "--seed",
        "12",
    ]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn selftest_passes_and_detects_a_corrupted_table() {
    let a = polycert(&["selftest", "--seed", "3"]);
    assert_eq!(code(&a), 0, "{}", stdout(&a));
    assert!(!stdout(&a).contains("FAIL"));
    let b = polycert(&["selftest", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);

    let broken = polycert(&["selftest", "--inject-fault", "corrupt-threshold-table"]);
    assert_eq!(code(&broken), 1);
    let text = stdout(&broken);
    assert!(text.contains("PASS form-identity"), "{text}");
    assert!(text.contains("FAIL boundary-detection"), "{text}");
}

#[test]
fn batch_keeps_going_and_keeps_order() {
    let input = "1,1,1\n\n# comment\n1,x,1\n1,3,1\n1,1,1,1\n1,2,1\n";
    let o = with_stdin(&["check", "--file", "-", "--format", "json"], input);
    assert_eq!(code(&o), 1);
    let entries = json(&o);
    let entries = entries.as_array().unwrap();
    let lines: Vec<u64> = entries
        .iter()
        .map(|e| e["line"].as_u64().unwrap())
        .collect();
    assert_eq!(lines, [1, 4, 5, 6, 7]);
    assert_eq!(entries[0]["report"]["verdict"], "CertifiedPositive");
    assert!(entries[1]["error"]
        .as_str()
        .unwrap()
        .contains("malformed number"));
    assert_eq!(entries[2]["report"]["verdict"], "ConditionFails");
    assert_eq!(entries[3]["report"]["verdict"], "CertifiedOneRealZero");
    assert_eq!(entries[4]["report"]["verdict"], "BoundaryCase");

    let clean = with_stdin(&["check", "--file", "-"], "1,1,1\n1,3,1\n1,2,1\n");
    assert_eq!(code(&clean), 2);
}

#[test]
fn csv_and_json_carry_the_same_numbers() {
    let input = "1,1,1\n1,10,1,10,1\n3/4,3/2,3/4\n1,2,3,2,1\n";
    let j = json(&with_stdin(
        &["check", "--file", "-", "--format", "json"],
        input,
    ));
    let (_, rows) = csv_rows(&with_stdin(
        &["check", "--file", "-", "--format", "csv"],
        input,
    ));
    for entry in j.as_array().unwrap() {
        let line = entry["line"].to_string();
        let report = &entry["report"];
        let mine: Vec<&Vec<String>> = rows.iter().filter(|r| r[0] == line).collect();
        let ratios: Vec<(String, String)> = mine
            .iter()
            .filter(|r| r[4] == "ratio")
            .map(|r| (r[6].clone(), r[7].clone()))
            .collect();
        let expected: Vec<(String, String)> = report["comparisons"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| {
                (
                    c["ratio"].as_str().unwrap().into(),
                    c["relation"].as_str().unwrap().into(),
                )
            })
            .collect();
        assert_eq!(ratios, expected);
        let minors: Vec<String> = mine
            .iter()
            .filter(|r| r[4] == "minor")
            .map(|r| r[6].clone())
            .collect();
        let expected: Vec<String> = report["minors"]
            .as_array()
            .unwrap()
            .iter()
            .map(|m| m.as_str().unwrap().into())
            .collect();
        assert_eq!(minors, expected);
        assert!(mine
            .iter()
            .all(|r| r[3] == report["verdict"].as_str().unwrap()));
    }

    let sj = json(&polycert(&["sweep", "--n", "3", "--format", "json"]));
    let (_, srows) = csv_rows(&polycert(&["sweep", "--n", "3", "--format", "csv"]));
    for (row, obj) in srows.iter().zip(sj.as_array().unwrap()) {
        assert_eq!(row[1], obj["epsilon"].as_str().unwrap());
        assert_eq!(row[2], obj["verdict"].as_str().unwrap());
        assert_eq!(row[3], obj["distinct"].to_string());
        assert_eq!(row[4], obj["with_multiplicity"].to_string());
    }

    let rj = json(&polycert(&[
        "roots", "--coeffs", "-2,0,1", "--format", "json",
    ]));
    let (_, rrows) = csv_rows(&polycert(&[
        "roots", "--coeffs", "-2,0,1", "--format", "csv",
    ]));
    assert_eq!(rj["distinct"], 2);
    for (row, interval) in rrows.iter().zip(rj["intervals"].as_array().unwrap()) {
        assert_eq!(row[4], interval[0].as_str().unwrap());
        assert_eq!(row[5], interval[1].as_str().unwrap());
    }
}

#[test]
fn roots_examples() {
    let j = json(&polycert(&[
        "roots",
        "--coeffs",
        "1/4,3/4,3/4,1/4",
        "--format",
        "json",
    ]));
    assert_eq!(j["distinct"], 1);
    assert_eq!(j["with_multiplicity"], 3);
    let j = json(&polycert(&[
        "roots", "--coeffs", "1,1,1", "--format", "json",
    ]));
    assert_eq!(j["distinct"], 0);
    assert_eq!(code(&polycert(&["roots", "--coeffs", "0"])), 1);
}
