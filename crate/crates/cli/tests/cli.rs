use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn matsing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matsing")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn analyze_section_reports_known_numbers() {
    let out = matsing(&["analyze", "catalog:remark-4-8-iii", "--json"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["mu"], 25);
    assert_eq!(v["tau_function_right"], 10);
    assert_eq!(v["dim_pullback_jacobian"], 19);
    assert_eq!(v["name"], "remark-4-8-iii");
}

#[test]
fn analyze_text_output_lists_invariants() {
    let out = matsing(&["analyze", "diag-sym(1,2)"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("tau_ss") && l.ends_with(" 3")), "{text}");
    assert!(text.contains("diag:"), "{text}");
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "kind = symmetric\nvars = x, y\nmatrix = [[x, y], [x, y]]\n");
    for args in [
        vec!["analyze", bad.as_str()],
        vec!["analyze", "no-such-input"],
        vec!["analyze", "catalog:nope"],
        vec!["verify", "generic-sym-2", "--theorem", "bogus"],
        vec!["frobnicate"],
    ] {
        let out = matsing(&args);
        assert_eq!(code(&out), 1, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn failing_expectation_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "wrong.txt", "kind = general; vars = x, y\nmatrix = [[x, y^2], [y^3, x]]\nexpect.mu = 5\n");
    let out = matsing(&["analyze", &path, "--json"]);
    assert_eq!(code(&out), 4);
    let checks = json(&out)["checks"].as_array().unwrap().clone();
    let expect = checks.iter().find(|c| c["name"] == "expect:mu").unwrap();
    assert_eq!(expect["verdict"], "FAILS");
    assert_eq!(expect["lhs"], 4);
}

#[test]
fn verify_single_identities() {
    let dir = tempfile::tempdir().unwrap();
    let sym2 = write(dir.path(), "sym2.txt", "kind = symmetric; vars = x, y\nmatrix = [[x, y], [y, -x]]\n");
    let skew4 = write(dir.path(), "skew4.txt", "kind = skew; vars = a, b, c, d\nupper = [[a, b, c], [d, c^2], [a^2 + b^3]]\n");
    for (input, theorem) in [
        (sym2.as_str(), "submax"),
        ("catalog:generic-gen-2", "imax"),
        (skew4.as_str(), "gorp"),
        (skew4.as_str(), "gorenstein"),
    ] {
        let out = matsing(&["verify", input, "--theorem", theorem, "--json"]);
        assert_eq!(code(&out), 0, "{theorem}");
        let checks = json(&out);
        let checks = checks.as_array().unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c["verdict"] == "HOLDS"), "{theorem}: {checks:?}");
    }
}

#[test]
fn strict_verify_flags_inapplicable_identity() {
    // submax needs a single parameter
    let out = matsing(&["verify", "catalog:remark-4-8-iii", "--theorem", "submax"]);
    assert_eq!(code(&out), 0);
    let out = matsing(&["verify", "catalog:remark-4-8-iii", "--theorem", "submax", "--strict"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn resolution_of_generic_skew() {
    let out = matsing(&["resolution", "catalog:generic-skew-4", "--check", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["ranks"], serde_json::json!([1, 6, 15, 20, 15, 6, 1]));
    assert_eq!(v["d_squared_zero"], true);
    assert_eq!(v["homology"], serde_json::json!([1, 0, 0, 0, 0, 0, 0]));
}

#[test]
fn batch_on_empty_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = matsing(&["batch", dir.path().to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["files"], 0);
    assert_eq!(v["results"], serde_json::json!([]));
}

#[test]
fn batch_reports_bad_files_and_writes_summary() {
    let input = tempfile::tempdir().unwrap();
    write(input.path(), "a-good.txt", "kind = symmetric; vars = x, y\nmatrix = [[x, y], [y, -x]]\nexpect.mu = 1\n");
    write(input.path(), "b-bad.txt", "kind = symmetric\nvars = x\nmatrix = [[x, (]]\n");
    // outside the input directory so batch does not pick it up
    let out_dir = tempfile::tempdir().unwrap();
    let summary = out_dir.path().join("summary.json");
    let out = matsing(&["batch", input.path().to_str().unwrap(), "--output", summary.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("b-bad.txt") && text.contains("ERROR"), "{text}");
    let v: Value = serde_json::from_str(&fs::read_to_string(&summary).unwrap()).unwrap();
    assert_eq!(v["files"], 2);
    assert_eq!(v["errors"], 1);
    assert_eq!(v["totals"]["fails"], 0);
    assert_eq!(v["results"][0]["file"], "a-good.txt");
    assert!(v["results"][1]["error"].is_string());
}

#[test]
fn batch_with_failing_check_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "wrong.txt", "kind = symmetric; vars = x, y\nmatrix = [[x, y], [y, -x]]\nexpect.mu = 2\n");
    let out = matsing(&["batch", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 4);
}

#[test]
fn shipped_corpus_has_no_failures() {
    let corpus = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let out = matsing(&["batch", corpus.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v["files"].as_u64().unwrap() >= 5);
    assert_eq!(v["errors"], 0);
    assert_eq!(v["totals"]["fails"], 0);
}

#[test]
fn step_limit_exhaustion_exits_three() {
    let out = matsing(&["--max-steps", "1", "analyze", "catalog:remark-4-8-iii"]);
    assert_eq!(code(&out), 3, "{}", String::from_utf8_lossy(&out.stderr));
}
