use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_strongchordal"))
}

fn write_temp(tag: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("strongchordal-{}-{tag}.dg", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn emit(name: &str) -> String {
    let o = run(&["catalog", "emit", name]);
    assert_eq!(o.status.code(), Some(0));
    stdout(&o)
}

#[test]
fn catalog_emit_round_trips_through_recognize() {
    let text = emit("T1111");
    assert!(text.starts_with("name T1111\nn 7\n"));
    let path = write_temp("t1111", &text);
    let o = run(&["recognize", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with(r#"{"verdict":"no""#));
}

#[test]
fn tournament_with_two_triangles_is_rejected() {
    let path = write_temp("t5", &emit("T5"));
    let o = run(&["recognize", "--class", "tournament", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("arc-disjoint triangles"));
    assert!(o.stderr.is_empty());
}

#[test]
fn transitive_tournament_is_accepted_with_ordering() {
    let path = write_temp("tt3", "n 3\nloops 0 1 2\narc 0 1\narc 0 2\narc 1 2\n");
    let o = run(&["recognize", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ordering:"));
    let o = run(&["dominate", "--auto", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("dominating set (1): 0\n"));
}

#[test]
fn dominate_refuses_bad_ordering() {
    let d = write_temp("path", "n 3\nloops 0 1 2\narc 0 1\narc 1 0\narc 1 2\narc 2 1\n");
    let ord = write_temp("path-ord", "1 0 2\n");
    let o = run(&["dominate", "--ordering", ord.to_str().unwrap(), d.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not strong"));
    assert!(o.stdout.is_empty());
}

#[test]
fn oracle_reports_budget_exhaustion() {
    let path = write_temp("oracle-t5", &emit("T5"));
    assert_eq!(run(&["oracle", path.to_str().unwrap()]).status.code(), Some(1));
    let tt = write_temp("oracle-tt4", "n 4\narc 0 1\narc 0 2\narc 0 3\narc 1 2\narc 1 3\narc 2 3\n");
    assert_eq!(run(&["oracle", tt.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(run(&["oracle", "--budget", "1", tt.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn parse_errors_exit_with_two() {
    let path = write_temp("bad", "n 2\nedge 0 1\n");
    let o = run(&["recognize", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["recognize", "/nonexistent/file.dg"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn class_mismatch_is_a_usage_error() {
    let path = write_temp("c3", "n 3\narc 0 1\narc 1 2\n");
    let o = run(&["recognize", "--class", "tournament", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dot_output_lists_arcs() {
    let path = write_temp("dot", "n 2\narc 0 1\n");
    let o = run(&["recognize", "--dot", path.to_str().unwrap()]);
    assert!(stdout(&o).contains("0 -> 1;"));
}

#[test]
fn single_suite_runs() {
    let o = run(&["enumerate", "--suite", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("criterion 1: PASS"));
    assert_eq!(run(&["enumerate", "--suite", "11"]).status.code(), Some(2));
}
