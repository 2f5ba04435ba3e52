use std::process::{Command, Output};

use serde_json::Value;

fn hermsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hermsym")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = hermsym(&all);
    (serde_json::from_str(&stdout(&o)).expect("json on stdout"), o.status.code().unwrap())
}

#[test]
fn incident_prints_the_table_row() {
    let o = hermsym(&["incident", "I(5,3)", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("I(3,1) x I(2,2)  [Table 1]"));
}

#[test]
fn incident_lists_every_candidate_for_v() {
    let (v, code) = json(&["incident", "V", "2"]);
    assert_eq!(code, 0);
    let plans: Vec<&str> =
        v["answer"]["plans"].as_array().unwrap().iter().map(|p| p["plan"]["factors"].as_str().unwrap()).collect();
    assert_eq!(plans, ["I(2,4)", "II(5)", "IV(8)", "I(2,2)", "II(4)", "IV(8)"]);
}

#[test]
fn rational_reports_the_c2_exception() {
    let o = hermsym(&["rational", "C2(4,2)", "--arch", "def", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("C^(2)_{2n,n}"), "{out}");
    assert!(out.contains("III(2) x III(2)"), "{out}");
    let (v, _) = json(&["rational", "C2(4,2)", "--arch", "def", "2"]);
    assert_eq!(v["answer"]["steps"][0]["plan"]["exception"], "C2_2n_n");
}

#[test]
fn rational_runs_every_b_without_one() {
    let (v, code) = json(&["rational", "E7-31"]);
    assert_eq!(code, 0);
    let steps = v["answer"]["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 2);
    assert_eq!(steps[0]["plan"]["per_place"][0]["plan"]["factors"], "IV(10) x IV(1)");
}

#[test]
fn point_is_a_parse_error() {
    let o = hermsym(&["domain_info", "pt"]);
    assert_eq!(o.status.code(), Some(1));
    let (v, code) = json(&["domain_info", "pt"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "parse");
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(hermsym(&["boundary", "I(5,3)"]).status.code(), Some(1));
    assert_eq!(hermsym(&["boundary", "I(5,3)", "two"]).status.code(), Some(1));
    assert_eq!(hermsym(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(hermsym(&["--help"]).status.code(), Some(0));
}

#[test]
fn validation_failures_exit_with_two() {
    let (v, code) = json(&["rational", "2A(1;7,4)", "--arch", "(4,4)"]);
    assert_eq!(code, 2);
    assert_eq!(v["violations"][0], "if d = 1, then 2s < n+1");
    assert_eq!(hermsym(&["boundary", "III(2)", "3"]).status.code(), Some(2));
    assert_eq!(hermsym(&["domain_info", "IV(2)"]).status.code(), Some(2));
    assert_eq!(hermsym(&["rational", "2A(3;11,2)"]).status.code(), Some(2));
    assert_eq!(hermsym(&["rational", "1D2(6,1)", "--arch", "def,split"]).status.code(), Some(2));
}

#[test]
fn diagrams() {
    let o = stdout(&hermsym(&["diagram", "III(3)"]));
    assert!(o.contains("o---o<==o") && o.contains("η1  η2  η3"), "{o}");
    let o = stdout(&hermsym(&["diagram", "I(1,1)"]));
    assert_eq!(o.lines().nth(1), Some("o"));
    let o = stdout(&hermsym(&["diagram", "2A(3;11,2)"]));
    assert!(o.contains("●---●---○---●---●---○---●---●---○---●---●"), "{o}");
    assert_eq!(hermsym(&["diagram", "Q(3)"]).status.code(), Some(1));
}

#[test]
fn boundary_and_domain_info() {
    let (v, code) = json(&["boundary", "VI", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["answer"]["boundary"]["factor"], "IV(10)");
    assert_eq!(v["answer"]["levi"]["dim_v"], 32);
    let (v, _) = json(&["domain_info", "VI"]);
    assert_eq!(v["answer"]["cascade"].as_array().unwrap().len(), 3);
    assert_eq!(v["answer"]["complex_dim"], 27);
}

#[test]
fn check_passes_on_the_small_grid() {
    let o = hermsym(&["check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}
