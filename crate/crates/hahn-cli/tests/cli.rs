//! End-to-end behaviour of the `hahn` binary: outputs, exit codes, determinism.

use std::process::{Command, Output};

fn hahn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hahn")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn assert_usage_error(args: &[&str]) {
    let o = hahn(args);
    assert_eq!(o.status.code(), Some(2), "{args:?}");
    let err = String::from_utf8_lossy(&o.stderr);
    assert_eq!(err.trim_end().lines().count(), 1, "one-line diagnostic for {args:?}: {err}");
    assert!(err.starts_with("error: "), "{err}");
}

#[test]
fn uni_gram_diagonal_at_level_two() {
    let o = hahn(&["verify", "--suite", "uni", "--alpha", "0,0", "--N", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["status"], "pass");
    let orth = &v["reports"][0]["checks"][0];
    assert_eq!(orth["name"], "orthogonality");
    assert_eq!(orth["data"], serde_json::json!(["1", "8/3", "32"]));
}

#[test]
fn overlap_at_level_zero_is_one() {
    let o = hahn(&["overlap", "--N", "0", "--alpha", "0,0,0", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), ",0.0\n0.0,1\n");
}

#[test]
fn overlap_json_shape_and_labels() {
    let o = hahn(&["overlap", "--N", "1", "--alpha", "0,0,0"]);
    let v = json(&o);
    assert_eq!(v["rows"], serde_json::json!(["0.0", "1.0", "0.1"]));
    assert_eq!(v["cols"], serde_json::json!(["0.0", "1.0", "0.1"]));
    assert_eq!(v["mode"], "exact");
    assert_eq!(v["entries"].as_array().unwrap().len(), 9);
    assert_eq!(v["entries"][0], "sqrt(1/3)");
    for key in ["params", "rows", "cols", "entries", "mode"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn float_overlap_is_orthogonal() {
    let o = hahn(&["overlap", "--N", "3", "--alpha", "1/2,-1/2,7/3", "--mode", "float"]);
    let v = json(&o);
    let e: Vec<f64> = v["entries"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().parse().unwrap()).collect();
    let n = 10;
    for a in 0..n {
        for b in 0..n {
            let dot: f64 = (0..n).map(|r| e[r * n + a] * e[r * n + b]).sum();
            let want = if a == b { 1.0 } else { 0.0 };
            assert!((dot - want).abs() < 1e-12, "({a},{b}) {dot}");
        }
    }
}

#[test]
fn single_difference_check_passes() {
    let o = hahn(&["verify", "--suite", "bi", "--check", "diff-L1", "--alpha", "0,0,0", "--N", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["reports"][0]["checks"].as_array().unwrap().len(), 1);
}

#[test]
fn perturbation_fails_with_counterexample() {
    for (suite, check) in [("bi", "diff-L1"), ("bi", "normalized-recurrence-float"), ("oracle", "commute")] {
        let o = hahn(&["verify", "--suite", suite, "--check", check, "--alpha", "1/2,0,3", "--N", "3", "--perturb"]);
        assert_eq!(o.status.code(), Some(1), "{suite} {check}");
        let v = json(&o);
        assert_eq!(v["status"], "fail");
        let c = &v["reports"][0]["checks"][0];
        assert_eq!(c["status"], "fail");
        assert!(c["counterexample"]["at"].is_string(), "{c}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("verification failed"));
    }
}

#[test]
fn eval_families_agree_on_shared_cases() {
    // h₁(1; 0, 0; 2) = 0 and P_{1,0}(1,1) = 0 at α = 0
    let o = hahn(&["eval", "--family", "hahn1", "--alpha", "0,0", "--N", "2", "--degrees", "1", "--point", "1"]);
    assert_eq!(json(&o)["value"], "0");
    let o = hahn(&["eval", "--family", "hahn2", "--alpha", "0,0,0", "--N", "1", "--degrees", "1,0", "--point", "0,1"]);
    assert_eq!(json(&o)["normalized"], "-sqrt(3/2)");
    let two = hahn(&["eval", "--family", "hahn1", "--alpha", "1/2,3", "--N", "4", "--degrees", "2", "--point", "3"]);
    let many = hahn(&["eval", "--family", "hahnd", "--alpha", "1/2,3", "--N", "4", "--degrees", "2", "--point", "3"]);
    assert_eq!(json(&two)["value"], json(&many)["value"]);
    assert_eq!(json(&two)["normalized"], json(&many)["normalized"]);
}

#[test]
fn genfun_tables_have_labels() {
    let o = hahn(&["genfun", "--alpha", "0,0", "--N", "2", "--format", "csv"]);
    assert_eq!(stdout(&o), ",0,1,2\n0,1,-2,1/2\n1,1,0,-1\n2,1,2,1/2\n");
    let o = hahn(&["genfun", "--alpha", "0,0,0", "--N", "1", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with(",0.0,1.0,0.1\n0.0,"), "{text}");
}

#[test]
fn chain_emits_two_tables() {
    let o = hahn(&["chain", "--alpha", "0,0,0", "--N", "2"]);
    let v = json(&o);
    assert_eq!(v["mode"], "float");
    assert_eq!(v["cart_to_cyl"]["entries"].as_array().unwrap().len(), 36);
    assert_eq!(v["cyl_to_sph"]["entries"].as_array().unwrap().len(), 36);
    let o = hahn(&["chain", "--alpha", "0,0,0", "--N", "1", "--format", "csv"]);
    assert_eq!(stdout(&o).split("\n\n").count(), 2);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("hahn-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("overlap.csv");
    let o = hahn(&["overlap", "--N", "0", "--alpha", "0,0,0", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), ",0.0\n0.0,1\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["overlap", "--N", "4", "--alpha", "-1/2,7/3,3", "--mode", "float", "--format", "csv"][..],
        &["verify", "--suite", "oracle", "--alpha", "1/2,0,3", "--N", "3"][..],
        &["chain", "--N", "3", "--alpha", "0,1/2,3"][..],
    ] {
        assert_eq!(hahn(args).stdout, hahn(args).stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_usage_error(&["overlap", "--N", "1", "--alpha", "1/x,0,0"]);
    assert_usage_error(&["overlap", "--N", "1", "--alpha", "0,0"]);
    assert_usage_error(&["overlap", "--N", "1", "--alpha", "-1,0,0"]);
    assert_usage_error(&["overlap", "--alpha", "0,0,0"]);
    assert_usage_error(&["eval", "--family", "hahn2", "--alpha", "0,0,0", "--N", "2", "--degrees", "1,0", "--point", "2,1"]);
    assert_usage_error(&["eval", "--family", "hahn2", "--alpha", "0,0,0", "--N", "2", "--degrees", "2,1", "--point", "0,0"]);
    assert_usage_error(&["verify", "--suite", "bi", "--check", "nope", "--alpha", "0,0,0", "--N", "1"]);
    assert_usage_error(&["verify", "--suite", "bi", "--check", "diff-L1"]);
    assert_usage_error(&["verify", "--suite", "all", "--alpha", "0,0,0", "--N", "1"]);
    assert_usage_error(&["verify", "--suite", "uni", "--alpha", "0,0", "--N", "2", "--tol", "-1"]);
    assert_usage_error(&["verify", "--suite", "bogus"]);
    assert_usage_error(&["eval", "--family", "hahn1", "--alpha", "0,0", "--N", "2", "--degrees", "1", "--point", "3"]);
    assert_usage_error(&["frobnicate"]);
}

#[test]
fn help_exits_zero() {
    let o = hahn(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify"));
}
