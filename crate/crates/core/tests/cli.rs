use std::process::{Command, Output};

use serde_json::Value;

fn jahangir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jahangir")).args(args).output().expect("binary runs")
}

fn stdout_json(args: &[&str]) -> Value {
    let out = jahangir(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn count_examples() {
    let v = stdout_json(&["count", "--n", "2", "--m", "4", "--breakdown"]);
    assert_eq!(v["result"]["per_k"], serde_json::json!(["32", "80", "64", "16"]));
    assert_eq!(v["result"]["total"], "192");
    let v = stdout_json(&["count", "--n", "3", "--m", "16"]);
    assert_eq!(v["result"]["total"], "77132286525");
    let v = stdout_json(&["count", "--n", "2", "--m", "3", "--method", "all"]);
    assert_eq!(v["result"]["agreement"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(jahangir(&["count", "--n", "1", "--m", "3"]).status.code(), Some(2));
    assert_eq!(jahangir(&["count", "--n", "2"]).status.code(), Some(2));
    assert_eq!(jahangir(&["cycles", "--m", "2"]).status.code(), Some(2));
    let capped = jahangir(&["enumerate", "--n", "2", "--m", "5", "--cap", "10"]);
    assert_eq!(capped.status.code(), Some(3));
    assert!(capped.stdout.is_empty());
    assert!(!capped.stderr.is_empty());
    assert_eq!(jahangir(&["enumerate", "--n", "2", "--m", "5", "--cap", "10", "--limit", "10"]).status.code(), Some(0));
}

#[test]
fn identical_flags_give_identical_bytes() {
    for args in [
        &["count", "--n", "3", "--m", "6", "--method", "all", "--breakdown"][..],
        &["enumerate", "--n", "2", "--m", "4"][..],
        &["ratios", "--n", "3", "--m-max", "12"][..],
        &["cycles", "--m", "5", "--records"][..],
        &["graph", "--n", "2", "--m", "4"][..],
    ] {
        assert_eq!(jahangir(args).stdout, jahangir(args).stdout, "{args:?}");
    }
}

#[test]
fn enumerate_lists_distinct_trees() {
    let v = stdout_json(&["enumerate", "--n", "2", "--m", "4"]);
    let trees = v["result"]["trees"].as_array().unwrap();
    assert_eq!(trees.len(), 192);
    let distinct: std::collections::BTreeSet<String> = trees.iter().map(Value::to_string).collect();
    assert_eq!(distinct.len(), 192);
    let v = stdout_json(&["enumerate", "--n", "2", "--m", "3", "--limit", "1"]);
    assert_eq!(v["result"]["count"], 1);
}

#[test]
fn table_and_ratio_outputs() {
    let out = jahangir(&["table", "--n", "3", "--m-max", "9", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("m,sigma"));
    assert_eq!(text.lines().last(), Some("9,1330668"));
    assert_eq!(text.lines().count(), 8);

    let v = stdout_json(&["table", "--n", "2", "--m-max", "6"]);
    assert_eq!(v["result"]["rows"][3]["sigma"], "2700");

    let out = jahangir(&["ratios", "--n", "2", "--m-max", "5", "--format", "csv", "--precision", "4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "m,numerator,denominator,decimal\n3,96,25,3.8400\n4,361,96,3.7604\n");

    let v = stdout_json(&["ratios", "--n", "2", "--m-max", "4", "--precision", "2", "--decimal-comma"]);
    assert_eq!(v["result"]["entries"][0]["decimal"], "3,84");
}

#[test]
fn graph_dot_is_well_formed() {
    let out = jahangir(&["graph", "--n", "2", "--m", "3"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = dot.lines().collect();
    assert_eq!(lines.first(), Some(&"graph J_2_3 {"));
    assert_eq!(lines.last(), Some(&"}"));
    let body = &lines[1..lines.len() - 1];
    assert!(body.iter().all(|l| l.starts_with("  v") && l.ends_with(';')));
    assert_eq!(body.iter().filter(|l| l.contains(" -- ")).count(), 9);
    assert_eq!(body.iter().filter(|l| !l.contains(" -- ")).count(), 7);

    let v = stdout_json(&["graph", "--n", "2", "--m", "4", "--format", "json"]);
    assert_eq!(v["result"]["vertex_count"], 9);
    assert_eq!(v["result"]["edges"].as_array().unwrap().len(), 12);
}

#[test]
fn cycles_and_coeffs() {
    let v = stdout_json(&["cycles", "--m", "3"]);
    assert_eq!(v["result"]["cycles"], 9);
    assert_eq!(v["result"]["verification"]["generic_cycles"], 7);
    let v = stdout_json(&["cycles", "--m", "6"]);
    assert_eq!(v["result"]["cycles"], 36);
    let v = stdout_json(&["coeffs", "--m", "3"]);
    assert_eq!(v["result"]["coefficients"], serde_json::json!(["9", "6", "1"]));
    let v = stdout_json(&["coeffs", "--m", "4"]);
    assert_eq!(v["result"]["coefficients"], serde_json::json!(["16", "20", "8", "1"]));
}

#[test]
fn asymptotic_commands() {
    let v = stdout_json(&["delta", "--n", "2", "--m-used", "15"]);
    assert!(v["result"]["decimal"].as_str().unwrap().starts_with("3.73205082"));
    let v = stdout_json(&["conjecture", "--n", "3", "--m", "5"]);
    assert_eq!(v["result"]["actual"], "2523");
    let v = stdout_json(&["n-ratios", "--m", "3", "--n-max", "50"]);
    assert_eq!(v["result"]["strictly_decreasing"], true);
}
