use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_polyring-lab");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap_or(-1)
}

fn json(args: &[&str]) -> Value {
    serde_json::from_slice(&run(args).stdout).expect("json report")
}

fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("polyring-lab-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn fs_text_output() {
    let out = run(&["ramsey", "fs", "1,3,5", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("fs") && l.ends_with("[1, 3, 4, 5, 6, 8, 9]")));
}

#[test]
fn schur_number_csv() {
    let out = run(&["ramsey", "schur-number", "2", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "element,color\n1,0\n2,1\n3,1\n4,0\n");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["ramsey", "schur", "--coloring", &data("two-parts-5.csv")]), 0);
    assert_eq!(code(&["ramsey", "schur", "--coloring", "parity:4", "--distinct"]), 1);
    assert_eq!(code(&["ramsey", "fs", "1,x"]), 2);
    assert_eq!(code(&["ramsey", "schur-number", "3", "--budget-nodes", "5"]), 2);
    assert_eq!(code(&["zariski", "analyze", "--alg", "no-such-instance"]), 2);
    assert_eq!(code(&["no-such-command"]), 2);
    assert_eq!(code(&["sgrp", "idempotents", "--groupoid", "z6-mul"]), 0);
}

#[test]
fn replay_field_omits_out() {
    let path = tmp("fs.json");
    assert_eq!(code(&["ramsey", "fs", "2,4", "--out", path.to_str().unwrap()]), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["replay"], serde_json::json!(["ramsey", "fs", "2,4"]));
}

#[test]
fn thread_variable_is_validated() {
    let out = Command::new(BIN)
        .args(["ramsey", "fs", "1"])
        .env("POLYRING_LAB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn key_lemma_over_file_instance() {
    let v = json(&["ramsey", "keylemma", "--alg", &data("z4-double.json"), "--term", "d(x1)"]);
    assert_eq!((v["confirming"].as_u64(), v["vacuous"].as_u64()), (Some(4), Some(12)));
}

#[test]
fn sgrp_reports() {
    let v = json(&["sgrp", "ideals", "--groupoid", &data("z6-mul.json")]);
    assert_eq!(v["smallest_ideal"], serde_json::json!([0]));
    let v = json(&["sgrp", "ideals", "--groupoid", "right-zero-2"]);
    assert_eq!(v["minimal_left_ideals"], serde_json::json!([[0], [1]]));
}

#[test]
fn certificate_round_trip_and_tampering() {
    let cert = tmp("cert.json");
    let found = run(&[
        "zariski",
        "certificate",
        "--instance",
        &data("integer-ring.json"),
        "--n",
        "1",
        "--terms",
        "m(x1,x2) - m(x2,x1)",
        "--m",
        "2",
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(found.status.code(), Some(0));
    let path = cert.to_str().unwrap();
    assert_eq!(code(&["zariski", "verify", path]), 0);
    assert_eq!(json(&["zariski", "verify", path])["valid"], Value::Bool(true));

    let text = std::fs::read_to_string(&cert).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["certificate"]["terms"] = serde_json::json!(["x1 + #1"]);
    let tampered = tmp("tampered.json");
    std::fs::write(&tampered, v.to_string()).unwrap();
    assert_eq!(code(&["zariski", "verify", tampered.to_str().unwrap()]), 1);

    let truncated = tmp("truncated.json");
    std::fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    assert_eq!(code(&["zariski", "verify", truncated.to_str().unwrap()]), 2);
}

#[test]
fn affine_closure_accepts_negative_window() {
    let v = json(&["zariski", "affine-closure", "--points", "0,0;1,1;2,4", "--window", "-2..2"]);
    assert_eq!(v["full_window"], Value::Bool(true));
    assert_eq!(v["window_size"].as_u64(), Some(25));
}

#[test]
fn cantor_report() {
    let v = json(&["zariski", "cantor", "--m", "3"]);
    assert_eq!(v["complement_failures"], serde_json::json!([0, 3, 5, 6, 7]));
    assert_eq!(v["cylinders_algebraic"], Value::Bool(true));
    assert_eq!(v["algebraic_sets"], Value::String("256".into()));
}

#[test]
fn term_commands() {
    let v = json(&["term", "degree", "m(x1 + x2, x1)", "--vars", "1"]);
    assert_eq!(v["degree"].as_u64(), Some(2));
    assert_eq!(code(&["term", "normalize", "m(x1,"]), 2);
}
