use std::path::Path;

use racnshare::cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("racnshare").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn fixture() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/fig1_inferred.json").display().to_string()
}

#[test]
fn racn_exact_shadow_p2() {
    let v = json(&["racn", "--exact", "--family", "shadow", "--p", "2"]);
    assert_eq!(v["value"], 3);
    assert_eq!(v["exhaustive"], true);
}

#[test]
fn validate_shadow_table() {
    let (code, out, _) = call(&["validate", "--family", "shadow", "--p-range", "2..6", "--format", "table"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(1).take(5).collect();
    assert_eq!(rows.len(), 5);
    for row in rows {
        let cells: Vec<&str> = row.split_whitespace().collect();
        assert_eq!(cells[3], cells[4], "k columns differ in {row}");
    }
}

#[test]
fn strict_validation_fails_on_mismatch() {
    let (code, _, err) = call(&["validate", "--family", "shadow", "--p-range", "2..3", "--strict"]);
    assert_eq!(code, 1);
    assert!(err.contains("mismatch"));
    assert_eq!(call(&["validate", "--family", "shadow", "--p-range", "2..2", "--strict"]).0, 0);
}

#[test]
fn dissemination_fixture() {
    let v = json(&["simulate-dissemination", "--fixture", &fixture(), "--informed", "5,7"]);
    let rounds = v["rounds"].as_array().unwrap();
    assert_eq!(rounds.len(), 3);
    assert_eq!(rounds[2]["circuits"][0]["kind"], "path");
    assert_eq!(rounds[2]["circuits"][0]["vertices"], serde_json::json!(["8", "12", "1"]));
    assert_eq!(call(&["simulate-dissemination", "--fixture", &fixture(), "--informed", "5,99"]).0, 2);
}

#[test]
fn split_then_reconstruct_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = call(&["split", "--secret", "hello world", "--threshold", "3", "--shares", "5", "--seed", "9"]);
    assert_eq!(code, 0);
    let shares: Vec<Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(shares.len(), 5);
    let path = dir.path().join("shares.json");
    std::fs::write(&path, serde_json::to_string(&shares[1..4]).unwrap()).unwrap();
    let v = json(&["reconstruct", "--shares", path.to_str().unwrap()]);
    assert_eq!(v["secret_utf8"], "hello world");
    std::fs::write(&path, serde_json::to_string(&shares[..2]).unwrap()).unwrap();
    assert_eq!(call(&["reconstruct", "--shares", path.to_str().unwrap(), "--threshold", "3"]).0, 2);
}

#[test]
fn graph_and_labeling_files() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    let labels = dir.path().join("l.json");
    std::fs::write(&graph, call(&["build", "--family", "mycielski", "--p", "2"]).1).unwrap();
    std::fs::write(&labels, r#"{"labels": {"x1": 1, "x2": 3, "y1": 4, "y2": 5, "a": 2}}"#).unwrap();
    let v = json(&["verify-rainbow", "--graph", graph.to_str().unwrap(), "--labeling", labels.to_str().unwrap(), "--strict"]);
    assert_eq!(v["connected"], true);
    assert_eq!(v["colors"], 3);
    let v = json(&["weights", "--graph", graph.to_str().unwrap()]);
    assert_eq!(v["classes"].as_object().unwrap().len(), 4);
    std::fs::write(&labels, r#"{"labels": {"x1": 1, "x2": 1, "y1": 4, "y2": 5, "a": 2}}"#).unwrap();
    assert_eq!(call(&["weights", "--graph", graph.to_str().unwrap(), "--labeling", labels.to_str().unwrap()]).0, 2);
}

#[test]
fn reconstruction_every_family() {
    for family in ["shadow", "splitting", "mycielski"] {
        for p in ["2", "3", "4", "5"] {
            let v = json(&["simulate-reconstruction", "--family", family, "--p", p, "--secret-hex", "00ff10"]);
            assert_eq!(v["matches_secret"], true);
            assert_eq!(v["recovered_hex"], "00ff10");
        }
    }
    let v = json(&["simulate-reconstruction", "--family", "shadow", "--p", "3", "--secret", "s", "--optimal"]);
    assert_eq!(v["phases"].as_array().unwrap().len(), 2);
    assert_eq!(call(&["simulate-reconstruction", "--family", "shadow", "--p", "3", "--secret", "s", "--optimal", "--clamp"]).0, 2);
}

#[test]
fn identical_arguments_give_identical_bytes() {
    let runs: [&[&str]; 4] = [
        &["split", "--secret", "abc", "--threshold", "2", "--shares", "4", "--seed", "42"],
        &["simulate-reconstruction", "--family", "splitting", "--p", "4", "--secret", "abc", "--seed", "7"],
        &["racn", "--exact", "--family", "mycielski", "--p", "3"],
        &["validate", "--p-range", "2..4"],
    ];
    for args in runs {
        assert_eq!(call(args).1, call(args).1, "{args:?}");
    }
    let a = call(&["split", "--secret", "abc", "--threshold", "2", "--shares", "4", "--seed", "1"]).1;
    let b = call(&["split", "--secret", "abc", "--threshold", "2", "--shares", "4", "--seed", "2"]).1;
    assert_ne!(a, b);
}

#[test]
fn export_dot_and_formulas() {
    let (code, out, _) = call(&["export-dot", "--family", "shadow", "--p", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.contains(" -- ")).count(), 4);
    let v = json(&["formulas", "--family", "mycielski", "--p", "3"]);
    assert_eq!((v["k"].as_u64(), v["n"].as_u64(), v["lower_bound"].as_u64()), (Some(6), Some(7), Some(7)));
}
