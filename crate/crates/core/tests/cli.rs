//! End-to-end runs of the `homquiver` binary.

use std::process::Command;

use homquiver::cli::Report;

fn homquiver(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_homquiver"))
        .args(args)
        .env_remove("HOMQUIVER_CAP")
        .output()
        .expect("binary runs");
    let text = String::from_utf8(out.stdout).unwrap() + &String::from_utf8(out.stderr).unwrap();
    (out.status.code().unwrap(), text)
}

fn json(args: &[&str]) -> Report {
    let mut argv = vec!["--json"];
    argv.extend_from_slice(args);
    let (code, text) = homquiver(&argv);
    let r = Report::from_json(&text).unwrap();
    assert_eq!(r.exit_code, code);
    r
}

#[test]
fn preset_by_path_and_name() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/presets/sl3_singular.quiver");
    let by_path = json(&["gldim", path]);
    assert_eq!(by_path.results["gl_dim"], 2);
    assert_eq!(json(&["gldim", "presets/sl3_singular"]).results, by_path.results);
    assert_eq!(json(&["gldim", "sl3_singular.quiver"]).results, by_path.results);
}

#[test]
fn ext_and_serre() {
    let r = json(&["ext", "sl3_singular", "L3", "L3", "--max", "3"]);
    assert_eq!(r.results["dims"], serde_json::json!([1, 0, 1, 0]));
    let r = json(&["serre", "sl3_singular_monomial", "--simples", "L1,L3", "--check-fullness"]);
    assert_eq!(r.results["fullness"]["verdict"], "not extension full");
    assert_eq!(r.results["fullness"]["first_failure"]["degree"], 2);
}

#[test]
fn coxeter_and_liecoh() {
    let r = json(&["coxeter", "--type", "A2", "--eval", "pdcor", "--element", "e"]);
    assert_eq!(r.results["pd_simple"], 8);
    let r = json(&["coxeter", "--type", "A1", "--eval", "coideals"]);
    assert_eq!(r.results["count"], 3);
    let r = json(&["liecoh", "--preset", "sl2_lie", "--degree", "3"]);
    assert_eq!(r.results["dim"], 1);
    let r = json(&["liecoh", "--preset", "borel_sl2"]);
    assert_eq!(r.results["top_degree"]["passes"], true);
    assert_eq!(r.results["poincare"]["skipped"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(homquiver(&["--help"]).0, 0);
    assert_eq!(homquiver(&["resolve"]).0, 2);
    assert_eq!(homquiver(&["coxeter", "--type", "E9"]).0, 1);
    assert_eq!(homquiver(&["liecoh", "--preset", "sl2_lie", "--degree", "7"]).0, 1);
    let (code, text) = homquiver(&["preset", "sl2_principal", "--self-test"]);
    assert_eq!(code, 0);
    assert!(!text.contains("FAIL"));
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_homquiver"))
        .args(["--json", "resolve", "sl3_singular", "L3"])
        .env("HOMQUIVER_CAP", "1")
        .output()
        .unwrap();
    let r = Report::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(r.results["status"]["kind"], "truncated");
}
