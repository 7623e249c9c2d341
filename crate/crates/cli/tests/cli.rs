use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn froeberg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_froeberg"))
        .args(args)
        .env_remove("FROEBERG_PRIME")
        .env_remove("FROEBERG_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = froeberg(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn froeberg_reports_m0() {
    assert_eq!(json(&["froeberg", "--d", "2", "--n", "4", "--a", "10"])["m0"], 19);
    assert_eq!(json(&["froeberg", "--d", "1", "--degrees", "1,1"])["m0"], 1);
    let v = json(&["froeberg", "--d", "2", "--n", "6", "--a", "10", "--through", "30"]);
    let rows = v["values"].as_array().unwrap();
    assert_eq!(rows.len(), 31);
    assert_eq!(rows[16]["F"], -15);
    assert_eq!(rows[16]["F_plus"], 0);
    assert_eq!(rows[29]["F_plus"], 30);
    assert_eq!(rows[29]["hilbert_lower"], 0);
}

#[test]
fn missing_inclusion_bound_exits_one() {
    let out = froeberg(&["froeberg", "--d", "2", "--n", "2", "--a", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no inclusion bound"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["froeberg", "--d", "2", "--n", "4"],
        vec!["froeberg", "--d", "2", "--n", "4", "--a", "3", "--unknown"],
        vec!["table", "--d", "2", "--a", "10", "--n", "8..3"],
        vec!["verify", "hilbert", "--d", "1", "--n", "3", "--a", "2", "--trials", "0"],
        vec!["frobenius"],
    ] {
        assert_eq!(froeberg(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bounds_examples() {
    let v = json(&["bounds", "--d", "2", "--n", "5", "--a", "10"]);
    assert_eq!((v["tight"].as_u64(), v["frobenius"].as_u64()), (Some(19), Some(20)));
    assert_eq!((v["koszul"].as_u64(), v["semistable"].as_u64()), (Some(30), Some(25)));
    let v = json(&["bounds", "--d", "3", "--n", "4", "--a", "10", "--ainv", "-4"]);
    assert_eq!(v["ideal_cm"], 37);
    assert_eq!(v["m0"], 37);
    let v = json(&["bounds", "--d", "1", "--n", "3", "--a", "5"]);
    assert_eq!((v["frobenius"].as_u64(), v["semistable_frobenius"].as_u64()), (Some(9), Some(8)));
    let notes = v["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n["hypothesis"] == "strongly-semistable"));
}

#[test]
fn tables_match_published_rows() {
    let cases = [
        ("1", "2..7,10,11", [20, 15, 14, 13, 12, 12, 12, 11], [20, 15, 14, 13, 12, 12, 12, 11], 20),
        ("2", "3..8,10,11", [30, 21, 19, 18, 17, 16, 16, 15], [30, 27, 25, 24, 24, 23, 23, 22], 30),
        ("3", "4..11", [40, 26, 24, 22, 22, 21, 20, 20], [40, 38, 36, 35, 35, 34, 34, 33], 40),
    ];
    for (d, n, generic, semistable, koszul) in cases {
        let v = json(&["table", "--d", d, "--a", "10", "--n", n]);
        assert_eq!(v["generic"], serde_json::json!(generic), "d = {d}");
        assert_eq!(v["semistable"], serde_json::json!(semistable), "d = {d}");
        assert!(v["koszul"].as_array().unwrap().iter().all(|k| k == koszul));
    }
}

#[test]
fn tsv_agrees_with_json() {
    let args = ["table", "--d", "2", "--a", "10", "--n", "3..8,10,11"];
    let v = json(&args);
    let mut tsv_args = args.to_vec();
    tsv_args.extend(["--format", "tsv"]);
    let tsv = stdout(&froeberg(&tsv_args));
    for line in tsv.lines().skip(1) {
        let cells: Vec<&str> = line.split('\t').collect();
        let numbers: Vec<u64> = cells[1..].iter().map(|c| c.parse().unwrap()).collect();
        let (row, limit) = numbers.split_at(numbers.len() - 1);
        assert_eq!(v[cells[0]], serde_json::json!(row));
        assert_eq!(v["limit"][cells[0]], limit[0]);
    }

    let args = ["froeberg", "--d", "3", "--n", "5", "--a", "4"];
    let v = json(&args);
    let mut tsv_args = args.to_vec();
    tsv_args.extend(["--format", "tsv"]);
    let tsv = stdout(&froeberg(&tsv_args));
    let rows: Vec<Vec<i64>> = tsv
        .lines()
        .skip(2)
        .map(|l| l.split('\t').map(|c| c.parse().unwrap()).collect())
        .collect();
    for (row, expected) in rows.iter().zip(v["values"].as_array().unwrap()) {
        assert_eq!(row[1], expected["F"].as_i64().unwrap());
        assert_eq!(row[2], expected["F_plus"].as_i64().unwrap());
    }
}

#[test]
fn json_is_deterministic_and_versioned() {
    let args = ["verify", "hilbert", "--d", "2", "--n", "5", "--a", "4", "--trials", "6", "--seed", "11", "--format", "json"];
    let a = froeberg(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_froeberg"))
        .args(args)
        .env("FROEBERG_WORKERS", "3")
        .env_remove("FROEBERG_PRIME")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["seed"], 11);
    assert!(stdout(&a).trim_start().starts_with("{\n  \"schema\": 1"));
}

#[test]
fn verify_hilbert_anick_regime() {
    let v = json(&["verify", "hilbert", "--d", "2", "--n", "6", "--a", "10", "--p", "32003", "--trials", "20", "--seed", "7"]);
    assert_eq!(v["equality_rate"], 1.0);
    assert_eq!(v["inequality_violations"], 0);
    assert_eq!(v["per_trial"].as_array().unwrap().len(), 20);
}

#[test]
fn prime_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_froeberg"))
        .args(["verify", "hilbert", "--d", "1", "--n", "3", "--a", "2", "--trials", "2", "--format", "json"])
        .env("FROEBERG_PRIME", "101")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["p"], 101);
    let bad = Command::new(env!("CARGO_BIN_EXE_froeberg"))
        .args(["verify", "hilbert", "--d", "1", "--n", "3", "--a", "2"])
        .env("FROEBERG_PRIME", "100")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn verify_theorem_c_passes() {
    let out = froeberg(&["verify", "theorem-c", "--fixture", "fermat-cubic", "--n", "3", "--a", "2", "--seed", "7"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS"));
    let v = json(&["verify", "theorem-c", "--fixture", "fermat-quartic", "--n", "4", "--a", "3", "--seed", "7"]);
    assert_eq!(v["bound"], 6);
    assert_eq!(v["status"], "PASS");
    assert_eq!(froeberg(&["verify", "theorem-c", "--fixture", "fermat-sextic", "--n", "3", "--a", "2"]).status.code(), Some(1));
}

#[test]
fn verify_theorem_b_resolves_everything() {
    let v = json(&["verify", "theorem-b", "--fixture", "fermat-cubic-p2", "--qmax", "16", "--seed", "7"]);
    assert_eq!(v["all_resolved"], true);
    assert_eq!(v["basis_size"], 9);
    assert_eq!(v["fixture"], "fermat-cubic-p2");
}

#[test]
fn ideal_file_and_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let ideal = dir.path().join("ideal.txt");
    std::fs::write(&ideal, "p=2 v=3\n# (x^2, y^2)\n2; (2,0,0):1\n2; (0,2,0):1\n").unwrap();
    let report = dir.path().join("report.json");
    let out = froeberg(&[
        "verify",
        "theorem-b",
        "--fixture",
        "fermat-cubic-p2",
        "--ideal-file",
        ideal.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["bound"], 5);
    assert_eq!(v["all_resolved"], true);

    std::fs::write(&ideal, "p=2 v=3\n2; (2,0):1\n").unwrap();
    let bad = froeberg(&["verify", "theorem-b", "--fixture", "fermat-cubic-p2", "--ideal-file", ideal.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 2"));
    let missing = froeberg(&["verify", "theorem-b", "--fixture", "fermat-cubic-p2", "--ideal-file", Path::new("/nonexistent/x").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
}
