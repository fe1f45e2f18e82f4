use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use glpdom::graph::are_isomorphic;
use glpdom::io::{parse_graph6, to_graph6};
use glpdom::Graph;
use serde_json::{json, Value};
use tempfile::TempDir;

fn glpdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glpdom"))
        .args(args)
        .env_remove("GLPDOM_GUARD_N")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn lines(o: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&o.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect()
}

fn compute(g: &Graph, param: &str) -> Value {
    let o = glpdom(&["compute", "--g6", &to_graph6(g), "--param", param]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    lines(&o).remove(0)
}

fn write_spec(dir: &Path, base: &Graph, factors: &[Graph]) -> String {
    let g = |g: &Graph| json!({"format": "graph6", "data": to_graph6(g)});
    let spec = json!({"base": g(base), "factors": factors.iter().map(g).collect::<Vec<_>>()});
    let path = dir.join("spec.json");
    fs::write(&path, spec.to_string()).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn compute_values() {
    assert_eq!(compute(&Graph::cycle(6).unwrap(), "gamma_t")["value"], 4);
    assert_eq!(compute(&Graph::complete(5), "gamma")["value"], 1);
    let v = compute(&Graph::cycle(6).unwrap(), "beta0");
    assert_eq!(v["value"], 3);
    assert_eq!(v["upper"], true);
}

#[test]
fn compute_reports_null_without_feasible_set() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("g.txt");
    fs::write(&path, "3 1\n1 2\n").unwrap();
    let o = glpdom(&["compute", "--edgelist", path.to_str().unwrap(), "--param", "gamma_p"]);
    assert_eq!(code(&o), 0);
    assert_eq!(lines(&o)[0]["value"], Value::Null);
}

#[test]
fn parse_errors_exit_two() {
    assert_eq!(code(&glpdom(&["compute", "--g6", "~~~", "--param", "gamma"])), 2);
    assert_eq!(code(&glpdom(&["compute", "--g6", "A_", "--param", "gamma_zz"])), 2);
    assert_eq!(code(&glpdom(&["verify", "--suite", "T99"])), 2);
    assert_eq!(code(&glpdom(&["--guard-n", "65", "compute", "--g6", "A_", "--param", "gamma"])), 2);
}

#[test]
fn guard_breach_exits_three() {
    let g6 = to_graph6(&Graph::cycle(6).unwrap());
    let o = glpdom(&["--guard-n", "5", "compute", "--g6", &g6, "--param", "gamma"]);
    assert_eq!(code(&o), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_glpdom"))
        .args(["compute", "--g6", &g6, "--param", "gamma"])
        .env("GLPDOM_GUARD_N", "5")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn product_of_edgeless_factors_is_a_four_cycle() {
    let dir = TempDir::new().unwrap();
    let spec = write_spec(dir.path(), &Graph::complete(2), &[Graph::empty(2), Graph::empty(2)]);
    let o = glpdom(&["product", "--spec", &spec]);
    assert_eq!(code(&o), 0);
    let g = parse_graph6(String::from_utf8_lossy(&o.stdout).trim()).unwrap();
    assert!(are_isomorphic(&g, &Graph::cycle(4).unwrap()).unwrap());
}

#[test]
fn enumerate_families() {
    let p3 = to_graph6(&Graph::path(3));
    let o = glpdom(&["enumerate", "--g6", &p3, "--pair", "I,I"]);
    assert_eq!(code(&o), 0);
    let v = &lines(&o)[0];
    assert_eq!(v["count"], 2);
    assert_eq!(v["sets"], json!([[1], [0, 2]]));
    let c6 = to_graph6(&Graph::cycle(6).unwrap());
    let v = &lines(&glpdom(&["enumerate", "--g6", &c6, "--efficient"]))[0];
    assert_eq!(v["count"], 3);
}

#[test]
fn verify_total_invariance_exits_zero() {
    let o = glpdom(&["verify", "--suite", "T2", "--bmax", "3", "--pool", "default", "--seed", "42"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let rows = lines(&o);
    assert!(rows[0].get("header").is_some());
    let last = rows.last().unwrap();
    assert_eq!(last["violations"], 0);
    assert_eq!(last["summary"]["T2"]["violated"], 0);
}

#[test]
fn violations_exit_four_with_witness() {
    let dir = TempDir::new().unwrap();
    let spec = write_spec(dir.path(), &Graph::complete(2), &[Graph::complete(2), Graph::complete(2)]);
    let o = glpdom(&["verify", "--suite", "T10", "--spec", &spec]);
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("(I,T)"));
}

#[test]
fn order_one_factors_are_not_applicable() {
    let o = glpdom(&["verify", "--suite", "T6", "--bmax", "3", "--pool", "contains-K1"]);
    assert_eq!(code(&o), 0);
    let rows = lines(&o);
    let records: Vec<&Value> = rows.iter().filter(|r| r.get("theorem").is_some()).collect();
    assert!(!records.is_empty());
    assert!(records.iter().all(|r| r["status"] == "not-applicable"));
}

#[test]
fn hunt_with_zero_budget_writes_only_a_header() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("hunt.jsonl");
    let out = out.to_str().unwrap();
    for _ in 0..2 {
        let o = glpdom(&["--out", out, "hunt", "--target", "well-mu-glp:gamma_p", "--budget", "0"]);
        assert_eq!(code(&o), 0);
    }
    let text = fs::read_to_string(out).unwrap();
    let rows: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    // appended, never truncated
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r.get("header").is_some()));
}

#[test]
fn eff_hunt_header_records_the_circulant_reading() {
    let o = glpdom(&["hunt", "--target", "eff-gt-half", "--budget", "5", "--seed", "7"]);
    assert_eq!(code(&o), 0);
    let rows = lines(&o);
    assert!(rows[0]["header"]["flags"]["circulant_reading"].is_string());
    let circ: Vec<&Value> = rows.iter().filter(|r| r["kind"] == "circulant").collect();
    assert_eq!(circ.len(), 3);
    assert!(circ.iter().all(|r| r["gamma_t"] == 4 && r["holds"] == true));
}

#[test]
fn reports_are_deterministic_apart_from_the_header() {
    let args = ["verify", "--suite", "T3,T14", "--bmax", "3", "--samples", "10", "--seed", "9"];
    let one = glpdom(&[&["--jobs", "1"][..], &args].concat());
    let many = glpdom(&[&["--jobs", "4"][..], &args].concat());
    let body = |o: &Output| lines(o).into_iter().skip(1).collect::<Vec<_>>();
    assert_eq!(body(&one), body(&many));
}
