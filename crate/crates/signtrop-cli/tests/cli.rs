//! End-to-end runs of the `signtrop` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_signtrop")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn eval_balanced_product() {
    let o = run(&["eval", "(+0 (+) -0) (*) -(-1)"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "b-1");
    let o = run(&["eval", "+2 (*) -1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "-3");
}

#[test]
fn eval_parse_error_exits_with_two() {
    let o = run(&["eval", "+1 (+)"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn segment_membership() {
    let pts = data("fig2.pts");
    let o = run(&["member", "--mode", "tc", "--points", &pts, "--query", "[+-2, --2]"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "false");
    let o = run(&["member", "--mode", "to", "--points", &pts, "--query", "[+-2, --2]"]);
    assert_eq!(stdout(&o), "true");
    let o = run(&["--json", "member", "--points", &pts, "--query", "[+-2, --2]"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["member"], false);
    assert!(v["certificate"].as_str().unwrap().starts_with("halfspace closed"));
}

#[test]
fn bad_inputs_exit_with_two() {
    assert_eq!(code(&run(&["member", "--points", "/nonexistent.pts", "--query", "[+0]"])), 2);
    assert_eq!(code(&run(&["member", "--points", &data("fig2.pts"), "--query", "[+0]"])), 2);
    assert_eq!(code(&run(&["member", "--points", &data("fig2.pts"), "--query", "[+0, x]"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["verify", "--suite", "nope"])), 2);
    assert_eq!(code(&run(&["verify", "--suite", "faces", "--size", "huge"])), 2);
}

#[test]
fn hull_lists_grid_members() {
    let o = run(&["hull", "--points", &data("fig2.pts"), "--lo", "-2", "--hi", "0"]);
    assert_eq!(code(&o), 0);
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert!(lines.contains(&"[+0, +0]".to_string()));
    assert!(lines.contains(&"[--2, --2]".to_string()));
    assert!(!lines.contains(&"[+-2, --2]".to_string()));
    let o = run(&["hull", "--mode", "to", "--points", &data("fig2.pts"), "--lo", "-2", "--hi", "0"]);
    assert!(stdout(&o).lines().any(|l| l == "[+-2, --2]"));
}

#[test]
fn interval_description() {
    let o = run(&["interval", "--x", "[+0, +0]", "--y", "[--2, --2]"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("piece λ=+-2 μ=+0 vertices {[--2, --2], [+-2, +-2]}"), "{text}");
    assert!(text.contains("arc"));
}

#[test]
fn separation() {
    let o = run(&["separate", "--points", &data("fig2.pts"), "--query", "[+-2, --2]"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("closed ["), "{}", stdout(&o));
    let o = run(&["separate", "--points", &data("fig2.pts"), "--query", "[+-1, +-1]"]);
    assert_eq!(stdout(&o), "none");
    let o = run(&["separate", "--points", &data("fig2.pts"), "--other", &data("fig2.pts")]);
    assert_eq!(stdout(&o), "none");
    let o = run(&["separate", "--points", &data("fig2.pts"), "--query", "[+-1, +-1]", "--grid", "0,-1,-2"]);
    assert!(stdout(&o).contains("inconclusive"));
}

#[test]
fn lifts() {
    let o = run(&["lift", "--point", "[+2, -0]", "--type", "1"]);
    assert_eq!(stdout(&o), "[3*t^2, -3]");
    let o = run(&["lift", "--point", "[+2, -0]"]);
    assert_eq!(stdout(&o), "[t^2, -1]");
    let o = run(&["lift", "--points", &data("fig2.pts"), "--query", "[+-2, --2]"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("non-member"));
    let o = run(&["lift", "--points", &data("fig2.pts"), "--query", "[+-1, +-1]"]);
    let text = stdout(&o);
    assert!(text.starts_with("member"));
    assert!(!text.contains("no witness"), "{text}");
}

#[test]
fn linear_feasibility() {
    let o = run(&["lp", &data("feasible.lp")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("feasible"));
    let o = run(&["--json", "lp", &data("infeasible.lp")]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["feasible"], false);
}

#[test]
fn matroids() {
    let o = run(&["matroid", "--matrix", &data("plane.csv")]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.starts_with("13 vectors on 3 elements"));
    assert!(!text.contains("FAILS"));
    let o = run(&["matroid", "--vectors", &data("broken.om")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("V1"));
}

#[test]
fn verify_single_suites() {
    let o = run(&["verify", "--suite", "sandglass", "--seed", "1", "--size", "small"]);
    assert_eq!(code(&o), 0);
    let o = run(&["verify", "--suite", "pasch-tc-counterexample"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("pasch-tc-counterexample"));
    let o = run(&["--json", "verify", "--suite", "semiring"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["name"], "semiring");
    assert_eq!(v[0]["failure_count"], 0);
}

#[test]
fn verify_all_with_seed_seven() {
    let o = Command::new(env!("CARGO_BIN_EXE_signtrop"))
        .args(["verify", "--suite", "all", "--seed", "7"])
        .env("SIGNTROP_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let text = stdout(&o);
    for suite in ["semiring", "hulls", "lifts", "matroid", "minkowski-weyl", "paper-examples"] {
        assert!(text.contains(suite), "{suite} missing");
    }
    assert!(text.ends_with("(seed 7, size small)") || text.contains("suites passed"));
}

#[test]
fn thread_variable_must_be_positive() {
    let o = Command::new(env!("CARGO_BIN_EXE_signtrop")).args(["eval", "+1"]).env("SIGNTROP_THREADS", "zero").output().unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn sequential_flag_gives_the_same_answers() {
    let pts = data("fig2.pts");
    let a = run(&["hull", "--points", &pts]);
    let b = run(&["--sequential", "hull", "--points", &pts]);
    assert_eq!(stdout(&a), stdout(&b));
}
