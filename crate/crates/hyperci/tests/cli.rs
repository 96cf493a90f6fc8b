//! End-to-end tests of the command-line interface.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperci"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write_fixture(dir: &Path) -> String {
    let path = dir.join("fixture.txt");
    std::fs::write(&path, "x0 x1 x2\nx2 x3\nx2 x4 x5 x6\nx3 x6\n").unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn stats_fixture_line() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path());
    let out = run(&["stats", "--input", &input]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "nodes=7 hyperedges=4 avg_hyper_degree=1.57 avg_hyperedge_size=2.75\n"
    );
}

#[test]
fn stats_missing_file_fails() {
    let out = run(&["stats", "--input", "/nonexistent/data.txt"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("/nonexistent/data.txt"));
    assert!(stdout(&out).is_empty());
}

#[test]
fn rank_hyperci_top_node() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path());
    let out = run(&["rank", "--input", &input, "--method", "hyperci:1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "x2 16");
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn rank_hhd_top_node() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path());
    let out = run(&["rank", "--input", &input, "--method", "hhd"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next().unwrap(), "x2 3");
}

#[test]
fn rank_rejects_radius_on_degree_methods() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path());
    let out = run(&["rank", "--input", &input, "--method", "hd:2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rank_rejects_unknown_method() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path());
    let out = run(&["rank", "--input", &input, "--method", "pagerank"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("pagerank"));
}

#[test]
fn dismantle_outputs_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path());
    let csv = dir.path().join("t.csv");
    let json = dir.path().join("t.json");
    let svg = dir.path().join("t.svg");
    let args = [
        "dismantle",
        "--input",
        &input,
        "--method",
        "hyperci:1",
        "--batch",
        "0.14",
        "--csv",
        csv.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ];
    let out = run(&args);
    assert!(out.status.success(), "{}", stderr(&out));
    let first = stdout(&out);
    assert!(first.starts_with("ANC="), "{first}");

    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert!(csv_text.starts_with(
        "batch,removed_nodes,frac_removed,sigma_remaining,sigma_original,ratio\n"
    ));
    assert!(csv_text.contains("1,x2,0.142857,0.666667,0.571429,0.666667"));
    let json_text = std::fs::read_to_string(&json).unwrap();
    assert!(json_text.contains("\"strategy\": \"hyperci:1\""));
    let svg_text = std::fs::read_to_string(&svg).unwrap();
    assert!(svg_text.contains("<polyline"));

    let again = run(&args);
    assert_eq!(stdout(&again), first);
    assert_eq!(std::fs::read_to_string(&csv).unwrap(), csv_text);
    assert_eq!(std::fs::read_to_string(&json).unwrap(), json_text);
}

#[test]
fn dismantle_rejects_zero_stop_fraction() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path());
    let out = run(&[
        "dismantle", "--input", &input, "--method", "hhd", "--stop", "frac=0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dismantle_single_full_batch() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path());
    let out = run(&[
        "dismantle", "--input", &input, "--method", "hhd", "--batch", "1.0", "--norm", "original",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "ANC=0.000000\n");
}

#[test]
fn compare_three_methods() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path());
    let out = run(&[
        "compare",
        "--input",
        &input,
        "--methods",
        "hd,hhd,hyperci:1",
        "--batch",
        "0.14",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "dataset,hd,hhd,hyperci:1");
    let row = lines.next().unwrap();
    assert!(row.starts_with("fixture,"));
    assert_eq!(row.split(',').count(), 4);
}

#[test]
fn compare_rejects_duplicate_methods() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path());
    let out = run(&["compare", "--input", &input, "--methods", "hhd,hhd"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("duplicate"));
}

#[test]
fn sweep_l_two_radii() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path());
    let out = run(&[
        "sweep-l", "--input", &input, "--method", "hyperci", "--ls", "1,2", "--batch", "0.14",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "dataset,L=1,L=2");
    assert_eq!(lines.next().unwrap().split(',').count(), 3);
}

#[test]
fn sweep_l_rejects_empty_radii() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path());
    let out = run(&["sweep-l", "--input", &input, "--method", "hyperci", "--ls", ""]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parser_warning_goes_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dup.txt");
    std::fs::write(&path, "a a b\n").unwrap();
    let out = run(&["stats", "--input", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("duplicate label"));
    assert!(stderr(&out).contains(":1:"));
}

#[test]
fn help_documents_defaults() {
    let out = run(&["dismantle", "--help"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("0.01"));
    assert!(text.contains("all"));
    assert!(text.contains("remaining"));
}
