use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const GOLDEN_KEI: &str = "7
1 1 2 2 1 1 1
2 2 1 1 2 2 2
4 4 3 3 4 4 3
3 3 4 4 3 3 4
6 6 5 5 5 5 5
5 5 6 6 6 6 6
7 7 7 7 7 7 7
";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_racks")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn put(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_verdicts_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let kei = put(&dir, "kei.txt", GOLDEN_KEI);
    let o = run(&["validate", s(&kei)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "kei\n");

    let rack = put(&dir, "rack.txt", "2\n2 2\n1 1\n");
    assert_eq!(stdout(&run(&["validate", s(&rack)])), "rack\n");

    let bad = put(&dir, "bad.txt", "2\n1 1\n2 1\n");
    let o = run(&["validate", s(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not_rack: column 2"));

    let dihedral = put(&dir, "d3.txt", "3\n1 3 2\n3 2 1\n2 1 3\n");
    assert_eq!(stdout(&run(&["validate", s(&dihedral)])), "kei\n");

    let q = put(&dir, "q.txt", "4\n1 1 1 2\n2 2 2 3\n3 3 3 1\n4 4 4 4\n");
    assert_eq!(stdout(&run(&["validate", s(&q)])), "quandle\n");

    let mal = put(&dir, "mal.txt", "2\n1 x\n2 1\n");
    let o = run(&["validate", s(&mal)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("malformed: line 2"));
}

#[test]
fn not_self_distributive_reports_triple() {
    let dir = TempDir::new().unwrap();
    let t = put(&dir, "t.txt", "3\n2 1 1\n1 2 2\n3 3 3\n");
    let o = run(&["validate", s(&t)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("self-distributivity fails"), "{}", stdout(&o));
}

#[test]
fn decompose_then_construct_is_byte_equal() {
    let dir = TempDir::new().unwrap();
    let t = put(&dir, "t.txt", GOLDEN_KEI);
    let bp = stdout(&run(&["decompose", s(&t)]));
    assert!(bp.starts_with("degree 7\n"));
    let bp_path = put(&dir, "bp.txt", &bp);
    let o = run(&["construct", s(&bp_path)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), GOLDEN_KEI);
    assert_eq!(stderr(&o).trim(), "condition_b=true quandle_ok=true kei_ok=true");
}

#[test]
fn construct_rejects_condition_a_violation() {
    let dir = TempDir::new().unwrap();
    let bp = put(&dir, "bp.txt", "degree 3\ngenerators (1 2 3), (1 2)\nrep 1 pi (1 2 3)\n");
    let o = run(&["construct", s(&bp)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
}

#[test]
fn canon_is_invariant_and_iso_finds_witness() {
    let dir = TempDir::new().unwrap();
    let a = put(&dir, "a.txt", "3\n1 3 2\n3 2 1\n2 1 3\n");
    let b = put(&dir, "b.txt", "3\n1 3 2\n3 2 1\n2 1 3\n");
    let c = put(&dir, "c.txt", "3\n1 1 1\n2 2 2\n3 3 3\n");
    assert_eq!(stdout(&run(&["canon", s(&a)])), stdout(&run(&["canon", s(&b)])));
    let o = run(&["iso", s(&a), s(&b)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("isomorphic: "));
    let o = run(&["iso", s(&a), s(&c)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not isomorphic"));
}

#[test]
fn xe_rejects_nonzero_diagonal() {
    let dir = TempDir::new().unwrap();
    let e = put(&dir, "e.txt", "2\n1 0\n0 0\n");
    let o = run(&["xe", "--n", "4", s(&e)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_text_and_doc() {
    let o = run(&["enumerate", "--n", "4", "--kind", "quandle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(": 7 classes"));

    let dir = TempDir::new().unwrap();
    let reps = dir.path().join("reps.txt");
    let o = run(&["--format", "doc", "enumerate", "--n", "3", "--engine", "both", "--emit-tables", s(&reps)]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["n", "kind", "engine", "count", "group_breakdown", "representatives_path"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    assert_eq!(doc["count"], 6);
    let body = fs::read_to_string(&reps).unwrap();
    assert!(body.starts_with('#'));
    assert_eq!(racks::RackTable::parse_many(&body).unwrap().len(), 6);
}

#[test]
fn output_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("out.json");
    let o = run(&["--format", "doc", "--output", s(&out), "report", "--n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["lower_bound"][0]["k"], 4);
}

#[test]
fn caps_and_usage_errors() {
    assert_eq!(run(&["--degree-cap", "5", "enumerate", "--n", "6"]).status.code(), Some(3));
    assert_eq!(run(&["--brute-cap", "3", "enumerate", "--n", "4", "--engine", "brute"]).status.code(), Some(3));
    assert_eq!(run(&["--brute-cap", "9", "enumerate", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["--jobs", "0", "selftest"]).status.code(), Some(2));
    assert_eq!(run(&["validate", "/nonexistent/table.txt"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn jobs_do_not_change_output() {
    let one = run(&["--jobs", "1", "enumerate", "--n", "5"]);
    let four = run(&["--jobs", "4", "enumerate", "--n", "5"]);
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}
