//! End-to-end checks of the `tfr` binary: fixtures resolve by name,
//! documents round-trip through files, and exit codes reflect validity.

use std::process::Command;

fn tfr() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tfr"))
}

#[test]
fn report_moebius_ideal_emits_five_generators() {
    let out = tfr().args(["report", "moebius", "--ideal", "3"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for expected in [
        "X_v*X_x - X_u*X_y",
        "X_w*X_y - X_v*X_z",
        "X_x*X_z - X_u*X_w",
        "X_u*X_v*X_w",
        "X_u*X_v*X_z",
    ] {
        assert!(text.contains(expected), "missing `{expected}` in:\n{text}");
    }
}

#[test]
fn validate_fixture_and_file_round_trip() {
    let out = tfr().args(["fixture", "moebius"]).output().unwrap();
    assert!(out.status.success());
    let dir = std::env::temp_dir().join("tfr-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("moebius.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let out = tfr().args(["validate", path.to_str().unwrap()]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("valid: 19 cells"), "{text}");
}

#[test]
fn invalid_fan_exits_nonzero() {
    let dir = std::env::temp_dir().join("tfr-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad_fan.json");
    std::fs::write(
        &path,
        r#"{"fan":{"ambient_dim":2,"cones":[[[1,0],[0,1]],[[1,1],[-1,1]]]}}"#,
    )
    .unwrap();
    let out = tfr().args(["validate", path.to_str().unwrap()]).output().unwrap();
    assert!(!out.status.success());
}

#[test]
fn props_report_over_prime_field() {
    let out = tfr()
        .args(["report", "rp2_6vertex", "--props", "--field", "2", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["cohomology"]["cohen_macaulay"], serde_json::Value::Bool(false));
    let out = tfr()
        .args(["report", "rp2_6vertex", "--props", "--field", "3", "--json"])
        .output()
        .unwrap();
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["cohomology"]["cohen_macaulay"], serde_json::Value::Bool(true));
}

#[test]
fn oracle_check_prints_agreements() {
    let out = tfr().args(["report", "circle4", "--oracle-check", "2"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("all agreements"), "{text}");
}
