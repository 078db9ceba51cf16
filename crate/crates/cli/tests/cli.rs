//! Smoke tests against the built binary: output shapes and the exit-code
//! contract (0 exactly when the computation matches / the verdict holds).

use std::process::{Command, Output};

fn exseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exseq")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn fan_reports_invariants() {
    let out = exseq(&["fan", "--rays", "1,0;0,1;-1,-1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["self_intersections"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["picard_rank"], 1);
    assert_eq!(v["anticanonical_nef"], true);
}

#[test]
fn fan_rejects_bad_rays_with_code_two() {
    let out = exseq(&["fan", "--rays", "2,0;0,1;-1,-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn cohomology_of_twisted_plane_bundle() {
    let out = exseq(&["cohomology", "--rays", "1,0;0,1;-1,-1", "--divisor", "2,0,0"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!((v["h0"].as_u64(), v["h1"].as_u64(), v["h2"].as_u64()), (Some(6), Some(0), Some(0)));
}

#[test]
fn system_check_verdict_drives_exit_code() {
    let base = exseq(&["system", "base", "--base", "f2", "--s=-2"]);
    assert!(base.status.success());
    let dir = std::env::temp_dir().join("exseq-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f2s-2.json");
    std::fs::write(&path, &base.stdout).unwrap();
    let p = path.to_str().unwrap();

    // s = -2 is below the strongly exceptional threshold: verdict false.
    let check = exseq(&["system", "check", "--file", p, "--self-intersections", "0,2,0,-2"]);
    assert_eq!(check.status.code(), Some(1));
    assert_eq!(stdout_json(&check)["ok"], false);

    // Plain exceptionality still holds.
    let weak =
        exseq(&["system", "check", "--file", p, "--self-intersections", "0,2,0,-2", "--weak"]);
    assert!(weak.status.success());
    assert_eq!(stdout_json(&weak)["ok"], true);
}

#[test]
fn decide_lists_witness_chains() {
    let out = exseq(&["decide", "--self-intersections", "0,0,-1,-1,-1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["strong_exists"], true);
    assert_eq!(v["cyclic_exists"], true);
    assert!(v["chains"].as_array().is_some_and(|c| !c.is_empty()));
}

#[test]
fn search_finds_the_plane_system() {
    let out = exseq(&["search", "--self-intersections", "1,1,1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let found = v.as_array().unwrap();
    assert_eq!(found.len(), 1);
    assert_eq!(found[0]["dual_canonical"], serde_json::json!([1, 1, 1]));
}

#[test]
fn quiver_dot_output_has_tripled_arrows() {
    let out = exseq(&["quiver", "--base", "p2", "--format", "dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("v0 -> v1").count(), 3);
    assert_eq!(text.matches("->").count(), 9);
}

#[test]
fn report_exit_code_tracks_the_match() {
    let out = exseq(&["report", "census"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["ok"], true);
    assert_eq!(v["census_size"], 16);
}

#[test]
fn out_flag_writes_the_file() {
    let dir = std::env::temp_dir().join("exseq-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fan.json");
    let out = exseq(&["fan", "--rays", "1,0;0,1;-1,-1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["picard_rank"], 1);
}
