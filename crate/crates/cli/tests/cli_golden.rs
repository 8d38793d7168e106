use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lielevel")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    (serde_json::from_slice(&out.stdout).expect("json on stdout"), out.status.code().unwrap())
}

#[test]
fn sp8_three_form_level() {
    let (v, code) = json(&["level", "--group", "sp", "--n", "4", "--weight", "1,1,1,0", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["group"], "Sp_8");
    assert_eq!(v["level"], "8");
    assert!(!v["steps"].as_array().unwrap().is_empty());
}

#[test]
fn primitive_four_forms_in_eight_dimensions() {
    let out = run(&["dim", "--group", "sp", "--n", "4", "--weight", "1,1,1,1"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).lines().any(|l| l.split_whitespace().eq(["dim", "42"])));
}

#[test]
fn g2_standard_restricted_to_sl3() {
    let (v, code) = json(&["branch", "--group", "g2", "--weight", "0,1", "--json"]);
    assert_eq!(code, 0);
    let dims: Vec<&str> = v["summands"].as_array().unwrap().iter().map(|s| s["dim"].as_str().unwrap()).collect();
    assert_eq!(dims, ["1", "3", "3"]);
    assert_eq!(v["total_dim"], "7");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code().unwrap();
    assert_eq!(code(&["dim", "--group", "sp", "--n", "4", "--weight", "1,x"]), 64);
    assert_eq!(code(&["dim", "--group", "sp"]), 64);
    assert_eq!(code(&["level", "--group", "sl", "--n", "3", "--weight", "0,0,0"]), 1);
    assert_eq!(code(&["level", "--group", "g2", "--weight", "1,0"]), 2);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn library_errors_are_reported_as_json() {
    let (v, code) = json(&["level", "--group", "sl", "--n", "3", "--weight", "0,0,0", "--json"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "not_applicable");
}

#[test]
fn orbit_bound_from_environment() {
    let args = ["orbit", "--weight", "2,1,0", "--json"];
    let (enumerated, _) = json(&args);
    assert_eq!(enumerated["orbit_size"], "24");
    assert_eq!(enumerated["enumerated_size"], "24");

    let out = Command::new(env!("CARGO_BIN_EXE_lielevel"))
        .args(args)
        .env("LIE_LEVEL_ORBIT_BOUND", "2")
        .output()
        .unwrap();
    let skipped: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(skipped["enumerated_size"].is_null());
    assert_eq!(skipped["sign_changes"][0]["regular"], "16");
}
