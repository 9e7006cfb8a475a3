use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn picard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_picard"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = picard(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn strings(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect()
}

#[test]
fn discriminant_examples() {
    assert_eq!(json(&["discriminant", "--field", "-4", "--point", "-5,0,1"])["delta"], "10");
    assert_eq!(json(&["discriminant", "--field", "-3", "--point", "0,1,0"])["delta"], "1");
    let r = json(&["discriminant", "--field", "-4", "--point", "-4,0,2"]);
    assert_eq!(strings(&r["primitive"]), ["-2", "0", "1"]);
    assert_eq!(r["delta"], "4");
}

#[test]
fn normalize_examples() {
    let r = json(&["normalize", "--field", "-3", "--point", "-3,0,1"]);
    assert_eq!(r["delta"], "6");
    assert_eq!(strings(&r["target"]), ["-12", "0", "1"]);
    let r = json(&["normalize", "--field", "-4", "--point", "0,1,0"]);
    assert_eq!(strings(&r["target"]), ["-2", "0", "1"]);
}

#[test]
fn quaternion_reports() {
    let r = json(&["commensurable", "--field", "-4", "--d1", "1", "--d2", "2"]);
    assert_eq!(r["commensurable"], true);
    assert_eq!(r["by_norm_lemma"], true);
    assert_eq!(json(&["ramification", "--a", "1", "--b", "-4"])["ramified"], serde_json::json!([]));
    assert_eq!(json(&["ramification", "--a", "3", "--b", "-4"])["ramified"], serde_json::json!([2, 3]));
}

#[test]
fn errors_are_structured() {
    let out = picard(&["discriminant", "--field", "-4", "--point", "1,0,1"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "NotPositive");
}

#[test]
fn verify_passes() {
    let out = picard(&["verify"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn orbit_depth_zero_draws_the_seed() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("o.svg");
    let js = dir.path().join("o.json");
    let out = picard(&[
        "orbit", "--field", "-4", "--seed", "-5,0,1", "--depth", "0",
        "--out", svg.to_str().unwrap(), "--json", js.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let records: Value = serde_json::from_str(&std::fs::read_to_string(&js).unwrap()).unwrap();
    assert_eq!(records.as_array().unwrap().len(), 1);
    assert_eq!(std::fs::read_to_string(&svg).unwrap().matches("<circle").count(), 1);
}

#[test]
fn preset_writes_next_to_the_job_file() {
    let dir = tempfile::tempdir().unwrap();
    let job = Path::new(env!("CARGO_MANIFEST_DIR")).join("presets/eisenstein-d1.json");
    let copy = dir.path().join("job.json");
    let text = std::fs::read_to_string(job).unwrap().replace("\"depth\": 5", "\"depth\": 2");
    std::fs::write(&copy, text).unwrap();
    let out = picard(&["orbit", "--preset", copy.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(dir.path().join("out/eisenstein-d1.svg").exists());
    assert!(dir.path().join("out/eisenstein-d1.json").exists());
}
