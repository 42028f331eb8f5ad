//! Behavior tests for the `gwq` binary: exit-code contract, output formats,
//! environment handling.

use std::io::Write;
use std::process::{Command, Output};

fn gwq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gwq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn table_csv_matches_known_genus0_values() {
    let out = gwq(&[
        "table", "--n", "1", "--g-max", "0", "--order", "3", "--format", "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "g,d,value\n0,0,1\n0,1,12\n0,2,90\n0,3,520\n");
}

#[test]
fn table_rejects_surface_zero_with_usage_exit() {
    let out = gwq(&["table", "--n", "0", "--order", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("n must be >= 1"));
    assert!(stdout(&out).is_empty());
}

#[test]
fn csv_and_json_hold_identical_values() {
    let json_out = gwq(&[
        "table", "--n", "2", "--g-max", "2", "--order", "5", "--format", "json",
    ]);
    let csv_out = gwq(&[
        "table", "--n", "2", "--g-max", "2", "--order", "5", "--format", "csv",
    ]);
    assert!(json_out.status.success() && csv_out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    assert_eq!(doc["schema_version"], "1");
    let json_rows: Vec<(u64, u64, String)> = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["g"].as_u64().unwrap(),
                r["d"].as_u64().unwrap(),
                r["value"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    let csv_rows: Vec<(u64, u64, String)> = stdout(&csv_out)
        .lines()
        .skip(1)
        .map(|line| {
            let mut parts = line.splitn(3, ',');
            (
                parts.next().unwrap().parse().unwrap(),
                parts.next().unwrap().parse().unwrap(),
                parts.next().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(json_rows, csv_rows);
}

#[test]
fn table_out_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let out = gwq(&[
        "table",
        "--n",
        "1",
        "--g-max",
        "0",
        "--order",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["surface_n"], 1);
}

#[test]
fn order_env_var_is_the_fallback_and_must_parse() {
    let out = Command::new(env!("CARGO_BIN_EXE_gwq"))
        .args(["table", "--n", "1", "--g-max", "0", "--format", "csv"])
        .env("GWQ_ORDER_DEFAULT", "2")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "g,d,value\n0,0,1\n0,1,12\n0,2,90\n");

    let bad = Command::new(env!("CARGO_BIN_EXE_gwq"))
        .args(["table", "--n", "1"])
        .env("GWQ_ORDER_DEFAULT", "three")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("GWQ_ORDER_DEFAULT"));
}

#[test]
fn explicit_order_flag_beats_the_env_var() {
    let out = Command::new(env!("CARGO_BIN_EXE_gwq"))
        .args([
            "table", "--n", "1", "--g-max", "0", "--order", "1", "--format", "csv",
        ])
        .env("GWQ_ORDER_DEFAULT", "5")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "g,d,value\n0,0,1\n0,1,12\n");
}

#[test]
fn verify_order_zero_is_legal_and_clean() {
    let out = gwq(&["verify", "--n-max", "3", "--g-max", "2", "--order", "0"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("identities verified"));
}

#[test]
fn verify_json_report_shape() {
    let out = gwq(&[
        "verify", "--n-max", "1", "--g-max", "1", "--order", "6", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["all_verified"], true);
    assert!(doc["reports"].as_array().unwrap().len() > 10);
}

#[test]
fn verify_failure_names_the_identity() {
    let out = gwq(&[
        "verify", "--n-max", "1", "--g-max", "1", "--order", "8", "--mutate", "sigma",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("first failure"));
    assert!(text.contains("G = (1 - E2)/24"));
    assert!(text.contains("d=2"));
}

#[test]
fn recognize_descendent_prefactor() {
    // tG' expansion to order 12, written in the canonical text form
    let table = gwq(&[
        "table", "--n", "1", "--g-max", "0", "--order", "12", "--format", "csv",
    ]);
    assert!(table.status.success());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tgprime.txt");
    let mut file = std::fs::File::create(&path).unwrap();
    let sigma = |d: u64| (1..=d).filter(|k| d.is_multiple_of(*k)).sum::<u64>();
    let coeffs: Vec<String> = (0..=12u64).map(|d| (d * sigma(d)).to_string()).collect();
    writeln!(file, "{}", coeffs.join(" ")).unwrap();

    let out = gwq(&["recognize", "--weight", "4", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(-1/288) * E2^2 + (1/288) * E4^1\n");
}

#[test]
fn recognize_rejects_bad_tokens_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "1 1/2 oops 4").unwrap();
    let out = gwq(&["recognize", "--weight", "2", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("token 3"), "{err}");
    assert!(err.contains("oops"), "{err}");
}

#[test]
fn recognize_reports_no_solution_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eta.txt");
    // genus-0 series for n=1 to order 20; not in the ring at weight 12
    let table = gwq(&[
        "table", "--n", "1", "--g-max", "0", "--order", "20", "--format", "csv",
    ]);
    let coeffs: Vec<String> = String::from_utf8(table.stdout)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().to_string())
        .collect();
    std::fs::write(&path, coeffs.join(" ")).unwrap();
    let out = gwq(&["recognize", "--weight", "12", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("NoSolution"));
    assert!(stdout(&out).contains("order 20"));
}

#[test]
fn unknown_flags_are_usage_errors() {
    let out = gwq(&["table", "--n", "1", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
