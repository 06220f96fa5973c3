use std::process::{Command, Output};

use serde_json::Value;

fn cranklab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cranklab"))
        .args(args)
        .env_remove("CRANKLAB_Q")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn stat_reports_crank_and_rank() {
    let o = cranklab(&["stat", "5", "2", "2", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("crank: 2"));
    assert!(text.contains("rank: 1"));

    let o = cranklab(&["stat", "1", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["crank"], -1);
    assert_eq!(v["rank"], 0);
}

#[test]
fn stat_rejects_bad_parts() {
    assert_eq!(cranklab(&["stat", "0", "2"]).status.code(), Some(2));
    assert_eq!(cranklab(&["stat", "-3"]).status.code(), Some(2));
    assert_eq!(cranklab(&["stat"]).status.code(), Some(2));
}

#[test]
fn residue_table_csv() {
    let o = cranklab(&["table", "--Q", "5", "--n-max", "100", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,r,count");
    assert_eq!(lines.len() - 1, 101 * 5);
    let row4: Vec<&str> = lines
        .iter()
        .filter(|l| l.starts_with("4,"))
        .copied()
        .collect();
    assert_eq!(row4, ["4,0,1", "4,1,1", "4,2,1", "4,3,1", "4,4,1"]);
}

#[test]
fn table_usage_errors() {
    assert_eq!(
        cranklab(&["table", "--Q", "1", "--n-max", "5"])
            .status
            .code(),
        Some(2)
    );
    let o = cranklab(&["table", "--Q", "3", "--n-max", "6000"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("CRANKLAB_N_CAP_RESIDUE"), "{err}");
}

#[test]
fn table_to_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = cranklab(&[
            "table",
            "--Q",
            "7",
            "--n-max",
            "60",
            "--format",
            "json",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(o.status.success());
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let v: Value = serde_json::from_slice(&bytes).unwrap();
    assert!(v.is_object());
}

#[test]
fn crank_table_csv() {
    let o = cranklab(&["table", "--Q", "2", "--n-max", "4", "--crank"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("n,m,count"));
    assert!(text.contains("\n1,-1,1\n"));
}

#[test]
fn estimate_within_budget() {
    let o = cranklab(&["estimate", "--r", "0", "--Q", "3", "--n", "1000"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["residual_within_budget"], true);
    assert_eq!(v["realness_ok"], true);
    for key in [
        "p_over_Q",
        "main1",
        "main2",
        "error_bound",
        "total",
        "imag_residue",
    ] {
        assert!(v[key].as_str().unwrap().contains('e'), "{key}");
    }
}

#[test]
fn estimate_large_n_has_no_exact_side() {
    let o = cranklab(&["estimate", "--r", "0", "--Q", "3", "--n", "100000"]);
    assert!(o.status.success());
    let v = json(&o);
    assert!(v.get("exact").is_none());
    let log10: f64 = v["log10_total"].as_str().unwrap().parse().unwrap();
    assert!(log10.is_finite() && log10 > 345.0 && log10 < 347.0);
}

#[test]
fn estimate_even_modulus_is_usage_error() {
    let o = cranklab(&["estimate", "--r", "0", "--Q", "4", "--n", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("odd Q"));
}

#[test]
fn verify_suites() {
    let o = cranklab(&["verify", "congruences", "--l-max", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["status"], "pass");

    let o = cranklab(&["verify", "positivity", "--Q", "11", "--n-max", "40"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["details"][0]["details"]["n0"], 6);

    let o = cranklab(&["verify", "lemma", "--n-min", "6", "--n-max", "25"]);
    assert_eq!(o.status.code(), Some(0));

    let o = cranklab(&["verify", "budget", "--q-max", "31"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn failing_suite_exits_one() {
    // The small-Q sufficiency inequality fails below a = 581.
    let o = cranklab(&["verify", "sufficiency", "--Q", "3", "--a-max", "600"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["status"], "fail");
    assert_eq!(v["details"]["holds_from_a"], 581);
}

#[test]
fn unknown_suite_is_usage_error() {
    assert_eq!(cranklab(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn env_fallback_and_flag_precedence() {
    let run = |extra: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_cranklab"))
            .args(["verify", "positivity", "--n-max", "40"])
            .args(extra)
            .env("CRANKLAB_Q", "12")
            .output()
            .unwrap()
    };
    let v: Value = serde_json::from_slice(&run(&[]).stdout).unwrap();
    assert_eq!(v["details"]["n0"], 8);
    let v: Value = serde_json::from_slice(&run(&["--Q", "8"]).stdout).unwrap();
    assert_eq!(v["details"]["n0"], 6);
}
