//! Drives the installed binary end to end: output bytes, exit codes,
//! cap and usage errors, determinism.

use std::process::{Command, Output};

fn qcrystal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcrystal"))
        .args(args)
        .env_remove("QCRYSTAL_GRAPH_CAP")
        .env_remove("QCRYSTAL_MATRIX_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qcrystal(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    qcrystal(args).status.code().expect("exit code")
}

#[test]
fn graph_dot_b4() {
    let dot = stdout(&[
        "graph", "--n", "4", "--mode", "q2", "--format", "dot", "--ascii",
    ]);
    // 10 solid strings-edges plus one dashed edge per word ending in 1.
    assert_eq!(dot.matches(" -> ").count(), 18);
    assert!(dot.contains("\"1111\" -> \"1112\" [label=\"1bar\", style=dashed];"));
    assert!(dot.contains("\"1111\" -> \"2111\" [label=\"1\"];"));
    assert!(dot.contains("\"2221\" -> \"2222\" [label=\"1\"];"));
    assert!(dot.contains("\"2221\" -> \"2222\" [label=\"1bar\", style=dashed];"));
    assert!(!dot.contains("\"1122\" ->"));
    assert_eq!(dot.lines().filter(|l| l.ends_with("\";")).count(), 16);
}

#[test]
fn graph_json_b1() {
    let json = stdout(&["graph", "--n", "1", "--mode", "q2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["schema"], "qcrystal/1");
    assert_eq!(v["nodes"], serde_json::json!(["1", "2"]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);
}

#[test]
fn graph_output_is_byte_identical() {
    let a = stdout(&["graph", "--n", "5", "--format", "json"]);
    let b = stdout(&["graph", "--n", "5", "--format", "json"]);
    assert_eq!(a, b);
}

#[test]
fn graph_cap_exit_code() {
    assert_eq!(exit_code(&["graph", "--n", "64"]), 2);
    assert_eq!(exit_code(&["graph", "--n", "5", "--graph-cap", "4"]), 2);
}

#[test]
fn component_report() {
    let text = stdout(&["component", "22122122"]);
    assert!(text.contains("members (8):"));
    assert!(text.contains("highest: 11121121"));
    assert!(text.contains("lowest: 22122122"));
    assert!(text.contains("A: {3,4,6,7}"));
    assert!(text.contains("hat: 2222"));
    assert!(text.contains("bar: 1212"));

    let json = stdout(&["component", "1111", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["members"].as_array().unwrap().len(), 8);
    assert_eq!(v["lowest"], serde_json::json!(["2222"]));

    let json = stdout(&["component", "1121", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["members"].as_array().unwrap().len(), 4);
}

#[test]
fn gbasis_text() {
    assert_eq!(stdout(&["gbasis", "112"]), "+112 -121\n");
    assert_eq!(stdout(&["gbasis", "21"]), "+21\n");
}

#[test]
fn transition_n2() {
    let tsv = stdout(&["transition", "--n", "2"]);
    assert!(tsv.contains("L(21)\tM(21)\t1"));
    assert!(tsv.contains("L(21)\tM(12)\t-1"));
    assert!(tsv.contains("M(21)\tL(21)\t1"));
    assert!(tsv.contains("M(21)\tL(12)\t1"));
    let text = stdout(&["transition", "--n", "2", "--format", "text"]);
    assert!(text.contains("L(21) = +[M(21)] -[M(12)]"));
    assert!(text.contains("M(21) = +[L(21)] +[L(12)]"));
}

#[test]
fn apply_operators() {
    assert_eq!(stdout(&["apply", "Fbar", "[L(22)]"]), "+[L(21)] +[L(12)]\n");
    assert_eq!(stdout(&["apply", "Ebar", "[M(21)]"]), "+[M(22)]\n");
    assert_eq!(stdout(&["apply", "E", "[M(11)]"]), "+[M(21)] +[M(12)]\n");
    assert_eq!(stdout(&["apply", "H", "[M(21)]"]), "0\n");
    assert_eq!(exit_code(&["apply", "Q", "[M(21)]"]), 3);
    assert_eq!(exit_code(&["apply", "E", "garbage"]), 3);
}

#[test]
fn decompose_words() {
    let text = stdout(&["decompose", "22122122"]);
    assert!(text.contains("A: {3,4,6,7}"));
    assert_eq!(exit_code(&["decompose", "1212"]), 3);
}

#[test]
fn verify_exit_codes_and_reports() {
    let out = qcrystal(&["verify", "hat", "--n-max", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["schema"], "qcrystal/1");
    assert_eq!(v["status"], "pass");

    assert_eq!(exit_code(&["verify", "bogus"]), 3);
    assert_eq!(exit_code(&["verify", "all", "--n-max", "4"]), 0);
}

#[test]
fn usage_errors() {
    assert_eq!(exit_code(&["component", "120"]), 3);
    assert_eq!(exit_code(&["graph"]), 3);
    assert_eq!(exit_code(&["nonsense"]), 3);
    assert_eq!(exit_code(&["graph", "--n", "2", "--mode", "q3"]), 3);
    assert_eq!(exit_code(&["--help"]), 0);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("qcrystal-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graph.dot");
    let out = qcrystal(&["graph", "--n", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("// qcrystal/1"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn env_caps_apply_and_flags_win() {
    let out = Command::new(env!("CARGO_BIN_EXE_qcrystal"))
        .args(["graph", "--n", "5"])
        .env("QCRYSTAL_GRAPH_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(env!("CARGO_BIN_EXE_qcrystal"))
        .args(["graph", "--n", "5", "--graph-cap", "8"])
        .env("QCRYSTAL_GRAPH_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = Command::new(env!("CARGO_BIN_EXE_qcrystal"))
        .args(["transition", "--n", "4"])
        .env("QCRYSTAL_MATRIX_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
