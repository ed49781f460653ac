use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn idom(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_idom"))
        .args(args)
        .env_remove("IDOM_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let o = idom(&full, "");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn gen_cycle_is_normalized() {
    assert_eq!(gen(&["cycle", "3"]), "3 3\n0 1\n1 2\n2 0\n");
    let wheel = gen(&["wheel", "3"]);
    assert!(wheel.starts_with("4 6\n"));
    assert_eq!(gen(&["random-dag", "9", "0.3", "--seed", "4"]), gen(&["random-dag", "9", "0.3", "--seed", "4"]));
}

#[test]
fn analyze_reports_structure() {
    let o = idom(&["analyze", "-"], &gen(&["cycle", "3"]));
    assert!(stdout(&o).contains("period=3 sccs=1 layers=[1,1,1]"));
    let o = idom(&["analyze", "-"], &gen(&["path", "3"]));
    let out = stdout(&o);
    assert!(out.contains("period=0 sccs=3") && !out.contains("layers"));
    let o = idom(&["analyze", "-"], &gen(&["dhk", "5", "3"]));
    assert!(stdout(&o).contains("layers=[3,6,6,3,6]"));

    let doc = json(&idom(&["analyze", "-", "--json"], &gen(&["path", "3"])));
    assert_eq!(doc["period"], 0);
    assert_eq!(doc["sccs"], 3);
    assert_eq!(doc["source_sccs"], serde_json::json!([0]));
    assert!(doc.get("layers").is_none());
}

#[test]
fn solve_text_and_exit_codes() {
    let o = idom(&["solve", "-"], &gen(&["cycle", "4"]));
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("status=found set=0,2\n"));

    let c5 = gen(&["cycle", "5"]);
    let o = idom(&["solve", "-", "--status-exit"], &c5);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("status=none\n"));
    assert_eq!(idom(&["solve", "-"], &c5).status.code(), Some(0));

    assert_eq!(idom(&["solve", "-", "--method", "even"], &c5).status.code(), Some(2));
    assert_eq!(idom(&["solve", "-", "--method", "dag"], &c5).status.code(), Some(2));
}

#[test]
fn solve_wheel_times_paw() {
    let w = temp_file("w3.txt", &gen(&["wheel", "3"]));
    let p = temp_file("paw.txt", &gen(&["paw"]));
    let product = gen(&["product", w.to_str().unwrap(), p.to_str().unwrap()]);
    assert!(product.starts_with("16 40\n"));
    let file = temp_file("w3xpaw.txt", &product);
    let o = idom(&["solve", file.to_str().unwrap(), "--method", "exact", "--status-exit"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("status=none"));
    assert!(stdout(&o).contains("method=exact"));
}

#[test]
fn solve_json_schema() {
    let doc = json(&idom(&["solve", "-", "--json"], &gen(&["cycle", "6"])));
    assert_eq!(doc["status"], "found");
    assert_eq!(doc["set"], serde_json::json!([0, 2, 4]));
    assert_eq!(doc["method"], "even-period");
    for key in ["seeds_explored", "subsets_explored", "elapsed_ms"] {
        assert!(doc[key].is_u64(), "{key}");
    }
    let doc = json(&idom(&["solve", "-", "--json", "--method", "brute"], &gen(&["cycle", "3"])));
    assert_eq!(doc["status"], "none");
    assert!(doc.get("set").is_none());
    assert_eq!(doc["subsets_explored"], 8);
}

#[test]
fn threads_flag_keeps_output() {
    let g = gen(&["dhk", "5", "4", "--variant", "ids"]);
    let one = idom(&["solve", "-", "--method", "layers", "--json"], &g);
    let four = idom(&["solve", "-", "--method", "layers", "--json", "--threads", "4"], &g);
    let (a, b) = (json(&one), json(&four));
    assert_eq!(a["set"], b["set"]);
    assert_eq!(a["seeds_explored"], b["seeds_explored"]);
}

#[test]
fn budget_exhaustion_exits_three() {
    let g = gen(&["dhk", "5", "3"]);
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_idom"));
    let file = temp_file("d53.txt", &g);
    let o = cmd.args(["solve", file.to_str().unwrap(), "--method", "exact"]).env("IDOM_BUDGET", "3").output().unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
    let o = Command::new(env!("CARGO_BIN_EXE_idom"))
        .args(["solve", file.to_str().unwrap()])
        .env("IDOM_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reports_witnesses() {
    let o = idom(&["verify", "-", "--set", "0,2"], &gen(&["cycle", "4"]));
    assert!(stdout(&o).contains("ids=true"));
    let o = idom(&["verify", "-", "--set", "0"], &gen(&["cycle", "3"]));
    assert!(stdout(&o).contains("dominating=false witness=2"));
    let o = idom(&["verify", "-", "--set", "0,1"], &gen(&["cycle", "3"]));
    assert!(stdout(&o).contains("independent=false witness=0->1"));

    let c3 = temp_file("c3.txt", &gen(&["cycle", "3"]));
    let torus = gen(&["product", c3.to_str().unwrap(), c3.to_str().unwrap()]);
    let doc = json(&idom(&["verify", "-", "--set", "0,4,8", "--json"], &torus));
    assert_eq!(doc["ids"], true);
    assert_eq!(doc["violations"]["arcs"], serde_json::json!([]));

    assert_eq!(idom(&["verify", "-", "--set", "0,x"], &gen(&["cycle", "3"])).status.code(), Some(2));
    assert_eq!(idom(&["verify", "-", "--set", "7"], &gen(&["cycle", "3"])).status.code(), Some(2));
}

#[test]
fn brute_values() {
    let c3 = gen(&["cycle", "3"]);
    assert_eq!(stdout(&idom(&["brute", "-", "--what", "i"], &c3)), "none\n");
    assert_eq!(stdout(&idom(&["brute", "-", "--what", "gamma"], &c3)), "2\n");
    assert_eq!(stdout(&idom(&["brute", "-", "--what", "idomatic"], &gen(&["cycle", "4"]))), "2\n");
    let doc = json(&idom(&["brute", "-", "--what", "exist", "--json"], &c3));
    assert_eq!(doc, serde_json::json!({ "what": "exist", "value": false }));
    let o = idom(&["brute", "-", "--cap", "4"], &gen(&["cycle", "5"]));
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn parse_errors_exit_two_with_line() {
    let o = idom(&["analyze", "-"], "3 2\n0 1\n1 1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(idom(&["analyze", "/nonexistent/graph.txt"], "").status.code(), Some(2));
    assert_eq!(idom(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(idom(&["gen", "dhk", "4", "3"], "").status.code(), Some(2));
}

#[test]
fn duplicate_arcs_warn_on_stderr() {
    let o = idom(&["analyze", "-"], "2 3\n0 1\n0 1\n1 0\n");
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("1 duplicate"));
}

#[test]
fn double_and_random_undirected_chain() {
    let u = gen(&["random-undirected", "6", "0.5", "--seed", "2"]);
    let file = temp_file("u6.txt", &u);
    let d = gen(&["double", file.to_str().unwrap()]);
    let edges: usize = u.split_whitespace().nth(1).unwrap().parse().unwrap();
    let arcs: usize = d.split_whitespace().nth(1).unwrap().parse().unwrap();
    assert_eq!(arcs, 2 * edges);
}

#[test]
fn generated_graphs_round_trip_through_solve_and_verify() {
    let families: [&[&str]; 7] = [
        &["paw"],
        &["wheel", "5"],
        &["dhk", "3", "3", "--variant", "ids"],
        &["random-dag", "12", "0.3", "--seed", "1"],
        &["random-bipartite", "4", "5", "0.5", "--seed", "1"],
        &["random-layered", "3", "3", "0.5", "--seed", "1"],
        &["random-digraph", "9", "0.3", "--seed", "7"],
    ];
    for args in families {
        let g = gen(args);
        assert!(idom(&["analyze", "-"], &g).status.success(), "{args:?}");
        let doc = json(&idom(&["solve", "-", "--json"], &g));
        if doc["status"] == "found" {
            let set: Vec<String> = doc["set"].as_array().unwrap().iter().map(|v| v.to_string()).collect();
            let v = json(&idom(&["verify", "-", "--json", "--set", &set.join(",")], &g));
            assert_eq!(v["ids"], true, "{args:?}");
        }
    }
}
