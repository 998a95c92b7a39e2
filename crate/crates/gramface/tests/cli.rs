//! Exit-code contract and output-format behavior of the command line.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_gramface"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
    )
}

#[test]
fn usage_errors_exit_1() {
    let (code, _, _) = run(&["mtable", "--n", "zero"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 1);
    let (code, _, stderr) = run(&["verify", "no-such-check"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("registered checks"), "{stderr}");
    assert!(stderr.contains("main-bound"));
    // Out-of-cap parameters are rejected before any computation.
    let (code, _, _) = run(&["mtable", "--n", "40", "--d", "2", "--k", "1"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["macaulay", "shift", "5", "2", "2", "1"]);
    assert_eq!(code, 1);
}

#[test]
fn parse_errors_exit_1_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\n  \"n\": 2,\n  oops\n}").unwrap();
    let (code, _, stderr) = run(&["space", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("line 3"), "{stderr}");

    let path = dir.path().join("badmono.json");
    std::fs::write(
        &path,
        r#"{"n": 2, "d": 2,
           "order": {"kind": "lex", "small_to_large": [1, 2]},
           "complement_monomials": ["x9"]}"#,
    )
    .unwrap();
    let (code, _, stderr) = run(&["space", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("variable index"), "{stderr}");
}

#[test]
fn mtable_budget_reports_incomplete() {
    let (code, out, _) = run(&[
        "mtable", "--n", "3", "--d", "3", "--k", "3", "--budget", "1",
    ]);
    assert_eq!(code, 2, "{out}");
    assert!(out.contains('?'), "{out}");
    let (code, out, _) = run(&[
        "mtable",
        "--n",
        "3",
        "--d",
        "3",
        "--k",
        "3",
        "--budget",
        "1",
        "--check-paper",
    ]);
    assert_eq!(code, 2);
    assert!(out.contains("incomplete"), "{out}");
}

#[test]
fn mtable_csv_is_quoted_and_complete() {
    let (code, out, _) = run(&[
        "mtable",
        "--n",
        "2..3",
        "--d",
        "2",
        "--k",
        "0..7",
        "--format",
        "csv",
        "--witnesses",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("n,d,k,value,witness\n"));
    // Witness lists contain commas and so must be quoted.
    assert!(out.contains("\"x1*x2, x1^2\""), "{out}");
    // k = 0 has the empty complement, k beyond the ambient dimension is
    // infeasible and printed as a dash.
    assert!(out.contains("2,2,0,0,\n"), "{out}");
    assert!(out.contains("2,2,7,-,\n"), "{out}");
}

#[test]
fn macaulay_outputs_decimal_integers() {
    let (code, out, _) = run(&["macaulay", "growth", "6", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "10");
    let (code, out, _) = run(&["macaulay", "green", "3", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "0");
    let (code, out, _) = run(&["macaulay", "shift", "0", "4", "1", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "0");
    let (code, out, _) = run(&["macaulay", "rep", "0", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "0 = 0");
}

#[test]
fn verify_gallery_passes() {
    let (code, out, _) = run(&["verify", "gallery"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("FAIL"), "{out}");
}

#[test]
fn verify_reports_violations_separately_from_failures() {
    let (code, out, _) = run(&[
        "verify",
        "quotient-generic",
        "--n",
        "3",
        "--d",
        "3",
        "--k",
        "2",
        "--trials",
        "12",
        "--seed",
        "5",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("fail 0"), "{out}");
    assert!(out.contains("genericity-resamples"), "{out}");
}

#[test]
fn verify_records_format_is_one_json_object_per_trial() {
    let (code, out, _) = run(&[
        "verify",
        "lift-formula",
        "--trials",
        "4",
        "--seed",
        "2",
        "--format",
        "records",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    for (i, line) in lines.iter().enumerate() {
        let value: serde_json::Value = serde_json::from_str(line).expect("valid json");
        assert_eq!(value["trial"], i as u64);
        assert_eq!(value["outcome"], "pass");
        assert_eq!(value["check"], "lift-formula");
    }
}

#[test]
fn space_reports_published_binomial_example() {
    // U = (x1^2 + x2^2)^perp in three variables has codim U^2 = 2. The file
    // stores the complement's generator, so emit the complement space first.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.json");
    std::fs::write(
        &path,
        r#"{"n": 3, "d": 2,
            "order": {"kind": "lex", "small_to_large": [1, 2, 3]},
            "generators": [
              {"x1*x2": "1"}, {"x1*x3": "1"}, {"x2*x3": "1"}, {"x3^2": "1"},
              {"x1^2": "1", "x2^2": "-1"}
            ]}"#,
    )
    .unwrap();
    let (code, out, _) = run(&["space", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("dim U = 5, codim U = 1"), "{out}");
    assert!(out.contains("codim U^2 = 2"), "{out}");

    let path = dir.path().join("missing-power.json");
    std::fs::write(
        &path,
        r#"{"n": 4, "d": 3,
            "order": {"kind": "lex", "small_to_large": [1, 2, 3, 4]},
            "complement_monomials": ["x1^3"]}"#,
    )
    .unwrap();
    let (code, out, _) = run(&["space", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("codim U^2 = 4"), "{out}");
    assert!(out.contains("base points: yes"), "{out}");

    let path = dir.path().join("empty.json");
    std::fs::write(
        &path,
        r#"{"n": 2, "d": 2,
            "order": {"kind": "lex", "small_to_large": [1, 2]},
            "generators": []}"#,
    )
    .unwrap();
    let (code, out, _) = run(&["space", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("dim U = 0, codim U = 3"), "{out}");
}

#[test]
fn enumerate_ss_lists_each_complement_once() {
    let (code, out, _) = run(&["enumerate-ss", "--n", "2", "--d", "2", "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "x1^2");
    let (code, out, _) = run(&[
        "enumerate-ss",
        "--n",
        "3",
        "--d",
        "3",
        "--k",
        "5",
        "--values",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    assert!(out.lines().all(|l| l.ends_with("-> 16")), "{out}");
}

#[test]
fn conjecture_prints_observations() {
    let (code, out, _) = run(&["conjecture", "--k-max", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("observations only"), "{out}");
    assert!(out.contains("4 (match)"), "{out}");
}
