//! End-to-end runs of the `abmod` binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn abmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abmod")).args(args).output().unwrap()
}

fn abmod_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_abmod"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_near_module() {
    let g = fixture("near-module7.g");
    let o = abmod(&["check", "--alpha", "1", "--beta", "1", "--set", "d,e,f", &g]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "true\n");
    let o = abmod(&["check", "--alpha", "1", "--set", "d,e,f", &g]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "false\n");
}

#[test]
fn c5_is_prime() {
    let o = abmod(&["prime", "--alpha", "1", "--beta", "1", &fixture("c5.g")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "prime\n");
    let o = abmod(&["prime", "--alpha", "1", "--beta", "1", &fixture("bull.g")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not prime"));
}

#[test]
fn closure_algorithms_print_the_same_set() {
    let g = fixture("near-module7.g");
    let refined = abmod(&["closure", "--alpha", "1", "--beta", "1", "--set", "a,b,e,g", &g]);
    let naive = abmod(&["closure", "--alpha", "1", "--beta", "1", "--set", "a,b,e,g", "--naive", &g]);
    assert!(refined.status.success());
    assert_eq!(stdout(&refined), stdout(&naive));
}

#[test]
fn cograph_answers() {
    let o = abmod(&["cograph", "--alpha", "1", "--beta", "1", &fixture("two-p4-join.g")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("true\nalpha_series {a,b,c,d,e,f,g,h}"));
    let o = abmod(&["cograph", "--alpha", "1", "--beta", "1", &fixture("c5.g")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn input_errors_exit_with_2() {
    let o = abmod_stdin(&["minimal", "-"], "p 3 1\n2 2\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(abmod(&["minimal", "--no-such-flag", &fixture("c5.g")]).status.code(), Some(2));
    assert_eq!(abmod(&["minimal", "/nonexistent/graph.g"]).status.code(), Some(2));
    let o = abmod(&["check", "--set", "a,z", &fixture("c5.g")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn empty_document_is_an_independent_set() {
    let o = abmod_stdin(&["minimal", "-"], "p 3 0\n");
    assert!(o.status.success());
    // every 2-set of an independent set is a (0,0)-module
    assert_eq!(stdout(&o), "{0,1}\n{0,2}\n{1,2}\n");
}

#[test]
fn json_output_is_stable() {
    let args = ["tree", "--json", "--strategy", "grow", &fixture("gallai8.g")];
    let first = abmod(&args);
    let second = abmod(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "tree");
    assert_eq!(v["meta"]["strategy"], "grow");
    assert_eq!(v["result"]["kind"], "ab_prime");
    assert!(v["meta"].get("wall_time_ms").is_none());

    let timed = abmod(&["minimal", "--json", "--timing", &fixture("c5.g")]);
    let v: serde_json::Value = serde_json::from_slice(&timed.stdout).unwrap();
    assert!(v["meta"]["wall_time_ms"].is_number());
}

#[test]
fn generated_graphs_round_trip() {
    let a = abmod(&["gen", "random", "--n", "12", "--p", "0.3", "--seed", "9"]);
    let b = abmod(&["gen", "random", "--n", "12", "--p", "0.3", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let doc = abmod::io::parse_graph(&stdout(&a)).unwrap();
    assert_eq!(doc.graph, abmod::io::generate::gen_random(12, 0.3, 9));

    let pmg = abmod(&["gen", "pmg4", "--depth", "2", "--seed", "1"]);
    let doc = abmod::io::parse_graph(&stdout(&pmg)).unwrap();
    assert_eq!(doc.graph.n(), 16);
}

#[test]
fn tree_as_dot() {
    let o = abmod(&["tree", "--dot", &fixture("gallai8.g")]);
    let text = stdout(&o);
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("->").count(), 11);
}

#[test]
fn bipartite_side_sources() {
    let crown = fixture("crown6.g");
    let o = abmod(&["bipartite-max", "--alpha", "1", &crown]);
    assert_eq!(stdout(&o), "{0,1,2}\n");
    let side = std::env::temp_dir().join(format!("abmod-side-{}.txt", std::process::id()));
    std::fs::write(&side, "0b111000\n").unwrap();
    let o = abmod(&["bipartite-max", "--alpha", "1", "--side-file", side.to_str().unwrap(), &crown]);
    std::fs::remove_file(&side).unwrap();
    assert_eq!(stdout(&o), "{3,4,5}\n");
    let o = abmod(&["bipartite-max", &fixture("c5.g")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ksplitter_and_matching_cut() {
    let c5 = fixture("c5.g");
    let o = abmod(&["ksplitter", "--set", "a,b", "-k", "2", &c5]);
    assert_eq!(stdout(&o), "true\nsplitters {c,e}\n");
    let o = abmod(&["ksplitter", "--set", "a,b", "-k", "1", &c5]);
    assert_eq!(o.status.code(), Some(1));
    let o = abmod(&["matching-cut", "--json", &c5]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["cut_edges"].as_array().unwrap().len(), 2);
}

#[test]
fn large_budgets_warn() {
    let g = abmod(&["gen", "random", "--n", "9", "--p", "0.5"]);
    let o = abmod_stdin(&["minimal", "--alpha", "2", "--beta", "2", "-"], &stdout(&g));
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn oracle_lists_every_module() {
    let o = abmod(&["oracle", "all-modules", &fixture("c5.g")]);
    // empty set, 5 singletons and V
    assert_eq!(stdout(&o).lines().count(), 7);
}
