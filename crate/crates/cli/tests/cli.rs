use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_charp-lab"))
}

fn write_scenario(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(format!("{name}.scenario"));
    std::fs::write(&path, text).unwrap();
    path
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn without_timings(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timings_ms");
    v
}

const TRIANGLE: &str = "characteristic: 2\nvariables: X, Y, Z\nideal: X*Y, X*Z, Y*Z\n";

#[test]
fn every_fixture_succeeds() {
    for name in ["axes", "planes", "plane_line", "two_planes", "fermat", "regular"] {
        let out = bin().args(["run", "--fixture", name]).output().unwrap();
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stdout));
        assert_eq!(json(&out)["status"], "ok");
    }
}

#[test]
fn fixtures_are_listed() {
    let out = bin().arg("fixtures").output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.contains("fermat"));
}

#[test]
fn reports_are_deterministic() {
    let run = || bin().args(["run", "--fixture", "plane_line"]).output().unwrap();
    let (a, b) = (json(&run()), json(&run()));
    assert_eq!(a["determinism_hash"], b["determinism_hash"]);
    assert_eq!(without_timings(a), without_timings(b));
}

#[test]
fn thread_count_does_not_change_the_report() {
    let one = bin()
        .args(["run", "--fixture", "planes"])
        .env("CHARP_LAB_THREADS", "1")
        .output()
        .unwrap();
    let many = bin().args(["run", "--fixture", "planes"]).output().unwrap();
    assert_eq!(json(&one)["determinism_hash"], json(&many)["determinism_hash"]);
}

#[test]
fn falsified_expectation_exits_2() {
    let path = write_scenario(
        "falsified",
        &format!("{TRIANGLE}[task special-ideals]\nexpect.primes: (X, Y); (X, Y, Z)\n"),
    );
    let out = bin().arg("run").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["status"], "falsified");
    assert_eq!(v["tasks"][0]["expectations"][0]["ok"], false);
}

#[test]
fn parse_error_reports_position() {
    let path = write_scenario("bad", "characteristic: 2\nvariables: X, Y\nideal: X*Y + W\n");
    let out = bin().arg("run").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3, column 14"), "{err}");
}

#[test]
fn unknown_field_is_rejected() {
    let path = write_scenario("unknown", &format!("{TRIANGLE}[task chain]\nexpect.chian: 0\n"));
    let out = bin().arg("run").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 5"));
}

#[test]
fn empty_task_list_echoes_scenario() {
    let path = write_scenario("empty", TRIANGLE);
    let out = bin().arg("run").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["tasks"].as_array().unwrap().len(), 0);
    assert_eq!(v["scenario"]["ideal"], "X*Y, X*Z, Y*Z");
    assert!(v["notices"][0].as_str().unwrap().contains("complete local"));
}

#[test]
fn resource_limit_is_an_error() {
    let path = write_scenario(
        "fermat-skew",
        "characteristic: 7\nvariables: X, Y, Z\nideal: X^3 + Y^3 + Z^3\nprime: X^3 + Y^3 + Z^3\n\
         [task skewmod-crosscheck]\nlevels: 4\ndegree: 6\n",
    );
    let out = bin().arg("run").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert!(v["tasks"][0]["error"].as_str().unwrap().contains("resource limit"));
}

#[test]
fn fermat_crosscheck_at_small_level() {
    let path = write_scenario(
        "fermat-small",
        "characteristic: 7\nvariables: X, Y, Z\nideal: X^3 + Y^3 + Z^3\nprime: X^3 + Y^3 + Z^3\n\
         [task skewmod-crosscheck]\na_test: X, Y^2\nlevels: 1\ndegree: 3\nexpect.agree: true\n",
    );
    let out = bin().arg("run").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn alt_u_diffs_the_lattices() {
    let out = bin()
        .args(["run", "--fixture", "plane_line", "--alt-u"])
        .output()
        .unwrap();
    let v = json(&out);
    let alt = &v["tasks"][1]["result"]["alt_u"];
    let extra: Vec<&str> = alt["only_single_u"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap())
        .collect();
    assert!(extra.contains(&"(X, Y)"), "{alt}");
    assert_eq!(alt["u"], "X*Y*Z");
}

#[test]
fn text_output() {
    let out = bin()
        .args(["run", "--fixture", "regular", "--text"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("- chain : ok"));
    assert!(text.ends_with("status: ok\n"));
}

#[test]
fn levels_flag_reaches_membership() {
    let path = write_scenario(
        "levels",
        &format!("{TRIANGLE}[task tight-closure]\nr: X\na_test: X + Y\n"),
    );
    let out = bin().arg("run").arg(&path).args(["--levels", "3"]).output().unwrap();
    let v = json(&out);
    assert_eq!(v["tasks"][0]["result"]["verdict"]["bound"], 3);
}

#[test]
fn check_single_criterion() {
    let out = bin().args(["check", "--only", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("criterion  2 PASS"));
}
