//! End-to-end CLI behavior: formats, round trips, exit codes, determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn tmp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("bspec-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn spectrum_of_majority_matches_brute_force() {
    let out = bspec(&["spectrum", "maj:3"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["n"], 3);
    let coeffs = json["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 4);
    assert_eq!(coeffs[0]["subset"], serde_json::json!([1]));
    assert_eq!(coeffs[0]["value"], 0.5);
    assert_eq!(coeffs[3]["subset"], serde_json::json!([1, 2, 3]));
    assert_eq!(coeffs[3]["value"], -0.5);
}

#[test]
fn spectrum_synth_round_trip_is_identity() {
    let spec_path = tmp_path("spec.json");
    let table_path = tmp_path("table.txt");
    let out = bspec(&[
        "spectrum",
        "random:4:2:99",
        "--out",
        spec_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = bspec(&[
        "synth",
        spec_path.to_str().unwrap(),
        "--out",
        table_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let again = bspec(&["spectrum", table_path.to_str().unwrap()]);
    assert!(again.status.success());
    let original: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&spec_path).unwrap()).unwrap();
    let round_tripped: serde_json::Value = serde_json::from_str(&stdout(&again)).unwrap();
    let (a, b) = (
        original["coefficients"].as_array().unwrap(),
        round_tripped["coefficients"].as_array().unwrap(),
    );
    assert_eq!(a.len(), b.len());
    for (ca, cb) in a.iter().zip(b) {
        assert_eq!(ca["subset"], cb["subset"]);
        let (va, vb) = (ca["value"].as_f64().unwrap(), cb["value"].as_f64().unwrap());
        assert!((va - vb).abs() <= 1e-12, "{va} vs {vb}");
    }
    std::fs::remove_file(spec_path).ok();
    std::fs::remove_file(table_path).ok();
}

#[test]
fn spectrum_degree_filter_truncates() {
    let out = bspec(&["spectrum", "maj:3", "--degree", "1"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let coeffs = json["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 3);
    assert!(coeffs
        .iter()
        .all(|c| c["subset"].as_array().unwrap().len() == 1));
}

#[test]
fn bh_of_dictator_is_one() {
    let out = bspec(&["bh", "dict:4:2"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["ratio"], 1.0);
    assert_eq!(json["pass"], serde_json::Value::Null);
}

#[test]
fn bh_csv_has_fixed_header() {
    let out = bspec(&["bh", "dict:2:1", "--csv"]);
    let text = stdout(&out);
    assert!(text.starts_with("name,lhs,rhs,ratio,pass,tol,witness,"));
}

#[test]
fn verify_markov_passes_at_degree_12() {
    let out = bspec(&["verify", "markov", "--d", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["failed"], 0);
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = bspec(&["verify", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_csv_flattens_reports() {
    let out = bspec(&["verify", "lorentz", "--trials", "10", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let header = text.lines().next().unwrap();
    assert!(header.starts_with("name,lhs,rhs,ratio,pass,tol,witness,"));
    // Params become trailing columns; every row has the header's arity.
    let cols = header.matches(',').count();
    for line in text.lines().skip(1) {
        assert_eq!(line.matches(',').count(), cols, "{line}");
    }
    assert!(text.contains("lorentz-dominance"));
}

#[test]
fn capacity_errors_exit_3() {
    let out = bspec(&["spectrum", "maj:25"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn parse_errors_exit_2_with_message() {
    let table_path = tmp_path("bad.txt");
    std::fs::write(&table_path, "n=2\n1 1 x 1\n").unwrap();
    let out = bspec(&["spectrum", table_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "stderr: {err}");
    std::fs::remove_file(table_path).ok();
}

#[test]
fn search_is_deterministic_and_reproducible() {
    let args = [
        "search",
        "--n",
        "3",
        "--d",
        "2",
        "--strategy",
        "sign-flip-local-search",
        "--iters",
        "50",
        "--seed",
        "11",
    ];
    let a = bspec(&args);
    let b = bspec(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let json: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(json["objective"], "bh-ratio");
    assert_eq!(json["trace"]["generator"], "chacha8");
}

#[test]
fn search_exhaustive_homogeneous_single_coefficient() {
    let out = bspec(&[
        "search",
        "--n",
        "2",
        "--d",
        "2",
        "--strategy",
        "flat-sign-exhaustive",
        "--homogeneous",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["ratio"], 1.0);
}

#[test]
fn search_csv_emits_ratio_table() {
    let csv_path = tmp_path("table.csv");
    let out = bspec(&[
        "search",
        "--n",
        "3",
        "--d",
        "2",
        "--strategy",
        "flat-sign-exhaustive",
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&csv_path).unwrap();
    assert!(text.starts_with("d,n,source,bh_ratio,hom_part_ratio\n"));
    assert!(text.lines().any(|l| l.starts_with("1,1,majority,")));
    std::fs::remove_file(csv_path).ok();
}

#[test]
fn cheb_csv_matches_hand_values() {
    let out = bspec(&["cheb", "--d", "2"]);
    let text = stdout(&out);
    assert!(text.starts_with("kind,d,m,value\n"));
    assert!(text.contains("psi,2,1,-6\n"));
    assert!(text.contains("monomial,2,2,2\n"));
    assert!(text.contains("markov,2,2,2\n"));
}

#[test]
fn threads_flag_does_not_change_results() {
    let one = bspec(&["--threads", "1", "spectrum", "random:6:3:5"]);
    let four = bspec(&["--threads", "4", "spectrum", "random:6:3:5"]);
    assert_eq!(stdout(&one), stdout(&four));

    // BSPEC_THREADS is the fallback for --threads.
    let via_env = Command::new(env!("CARGO_BIN_EXE_bspec"))
        .args(["spectrum", "random:6:3:5"])
        .env("BSPEC_THREADS", "2")
        .output()
        .expect("binary runs");
    assert_eq!(stdout(&one), stdout(&via_env));
}
