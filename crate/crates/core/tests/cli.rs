use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_meet-ideal")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("meet-ideal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn resolve_prints_shifts_and_betti_table() {
    let out = run(&["resolve", "fixture:l11", "--verify"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ranks: 11 15 6 1"));
    assert!(text.contains("F_1: S(-7)^6 + S(-8)^9"));
    assert!(text.contains("F_3: S(-12)^1"));
    assert!(text.contains("verify: ok"));
}

#[test]
fn resolve_json_has_basis_and_differential() {
    let out = run(&["resolve", "fixture:b2", "--closed-form", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["method"], "closed form");
    assert_eq!(v["minimal"], true);
    assert!(v["resolution"].is_object() || v["resolution"].is_array());
}

#[test]
fn closed_form_on_non_meet_distributive_is_an_input_error() {
    let out = run(&["resolve", "fixture:l11", "--closed-form"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("meet-distributive"));
}

#[test]
fn check_reports_classification() {
    let text = stdout(&run(&["check", "fixture:l11"]));
    assert!(text.contains("meet-irredundant: true"));
    assert!(text.contains("meet-distributive: false"));
    assert!(text.contains("total order: z a b c d f i e g h t"));
}

#[test]
fn betti_over_a_prime_field() {
    let text = stdout(&run(&["betti", "fixture:b3", "--field", "2"]));
    assert!(text.starts_with("field: GF(2)"));
    assert!(text.contains("linear: true"));
}

#[test]
fn dual_commands_agree_with_brute_force() {
    let text = stdout(&run(&["dual", "fixture:l8"]));
    assert!(text.contains("dual generators (7)"));
    assert!(text.contains("formula==bruteforce: true"));
    let text = stdout(&run(&["dual", "fixture:l9", "--poset-ideal", "abc,d"]));
    assert!(text.contains("formula==bruteforce: true"));
    let text = stdout(&run(&["dual", "fixture:l8", "--poset-ideal", "ab", "--coideal", "b"]));
    assert!(text.contains("formula==bruteforce: true"));
    let text = stdout(&run(&["dual", "--complex", "fixture:complex_triangle"]));
    assert!(text.contains("void complex"));
}

#[test]
fn intersect_reports_linear_resolution() {
    let text = stdout(&run(&["intersect", "fixture:l8", "--ideal", "abc,d", "--coideal", "a,b"]));
    assert!(text.contains("generators (6)"));
    assert!(text.contains("linear: true"));
    let out = run(&["intersect", "fixture:b3", "--ideal", "ab,ac,bc", "--coideal", "a,b,c"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("linear: false"));
}

#[test]
fn graft_and_bipartite() {
    let text = stdout(&run(&["graft", "fixture:complex_triangle"]));
    assert!(text.contains("cohen-macaulay: true"));
    let text = stdout(&run(&["bipartite", "fixture:graph_chain2"]));
    assert!(text.contains("order: x1<x2"));
    let out = run(&["bipartite", "--complex", "fixture:complex_poset_ideal", "--left", "x_a,x_b,x_c,x_d"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("equivalent: true"));
}

#[test]
fn malformed_input_exits_with_code_two() {
    let bad = scratch("bad.json", "{\"elements\": [\"a\", ");
    assert_eq!(run(&["check", bad.to_str().unwrap()]).status.code(), Some(2));
    let cyclic = scratch("cyclic.json", r#"{"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]}"#);
    assert_eq!(run(&["check", cyclic.to_str().unwrap()]).status.code(), Some(2));
    let no_meet = scratch("nomeet.json", r#"{"elements": ["a", "b"], "covers": []}"#);
    assert_eq!(run(&["check", no_meet.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["check", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(run(&["check", "fixture:nope"]).status.code(), Some(2));
    assert_eq!(run(&["betti", "fixture:l8", "--ideal", "zz"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn small_suite_passes_and_is_seeded() {
    let a = run(&["suite", "--max-elements", "4", "--seed", "3", "--graft-samples", "10", "--json"]);
    assert!(a.status.success());
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["config"]["seed"], 3);
    let b = run(&["suite", "--max-elements", "4", "--seed", "3", "--graft-samples", "10", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}
