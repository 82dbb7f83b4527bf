//! End-to-end tests of the `localdual` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_localdual"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden_run(args: &[&str]) -> Output {
    let file = data("golden.problem");
    let mut all = vec!["-f", file.to_str().unwrap()];
    all.extend_from_slice(args);
    run(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_problem(dir: &tempfile::TempDir, text: &str) -> PathBuf {
    let path = dir.path().join("input.problem");
    fs::write(&path, text).unwrap();
    path
}

#[test]
fn gb_of_golden_ideal() {
    let o = golden_run(&["gb"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "x1^4*x2^3 - x1^3*x2^4 - x1^5 + x1^4*x2 - x1*x2^4 + x2^5 + x1^2*x2 - x1*x2^2\n\
         x1^3*x2^5 - x1^4*x2^2 - x2^6 + x1*x2^3\n"
    );
}

#[test]
fn dual_at_origin_lists_nine_operators() {
    let o = golden_run(&["dual", "--at", "origin", "--order", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[0], "1");
    assert!(lines.contains(&"d_x1^2*d_x2 + d_x1*d_x2^2".to_string()));
    assert!(lines.contains(&"d_x2^3".to_string()));
}

#[test]
fn dual_at_maximal_ideal_matches_point() {
    let a = golden_run(&["dual", "--at", "origin", "--order", "3"]);
    let b = golden_run(&["dual", "--at", "m", "--order", "3"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn excess_at_origin() {
    let o = golden_run(&["excess", "--prime", "m"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "order = 3\ndimension = 2\nd_x1*d_x2\nd_x1^2*d_x2 + d_x1*d_x2^2\n"
    );
}

#[test]
fn ortiz_component_at_origin() {
    let o = golden_run(&["ortiz", "--prime", "m"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("nil = 4"));
    let gens: Vec<&str> = lines.collect();
    assert!(gens.contains(&"x1^2*x2 - x1*x2^2"));
    assert!(gens.contains(&"x1^4"));
}

#[test]
fn certificate_matches_golden_file() {
    let o = golden_run(&["noetherian"]);
    assert_eq!(o.status.code(), Some(0));
    let expected = fs::read_to_string(data("golden_certificate.json")).unwrap();
    assert_eq!(stdout(&o), expected);
}

#[test]
fn certificate_output_is_deterministic() {
    let a = golden_run(&["noetherian"]);
    let b = golden_run(&["noetherian"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn membership_verdicts_and_exit_codes() {
    let cert = data("golden_certificate.json");
    let cert = cert.to_str().unwrap();
    let o = golden_run(&["member", "--cert", cert, "--poly", "x1*x2*(x1 - x2^3)*(x2 - x1^3)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "member\n");

    // passes both curve components, fails at the embedded point
    let o = golden_run(&["member", "--cert", cert, "--poly", "(x1 - x2^3)*(x2 - x1^3)"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o), "not a member\n");
    let err = stderr(&o);
    assert!(err.contains("prime <x1, x2>"), "{err}");
    assert!(err.contains("operator d_x1*d_x2"), "{err}");
}

#[test]
fn parse_error_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_problem(&dir, "ring QQ[x1,x2];\nideal I = x1 + + x2;\n");
    let o = run(&["-f", path.to_str().unwrap(), "gb"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("2:16"), "{}", stderr(&o));
}

#[test]
fn semantic_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_problem(&dir, "ring QQ[x1,x2];\nideal I = x3;\n");
    let o = run(&["-f", path.to_str().unwrap(), "gb"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown variable"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(golden_run(&["dual"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn precondition_failures_exit_4() {
    assert_eq!(
        golden_run(&["excess", "--prime", "m", "--stall", "0"]).status.code(),
        Some(4)
    );
    let dir = tempfile::tempdir().unwrap();
    let path = write_problem(&dir, "ring QQ[x1,x2];\nideal I = x1^2, x1*x2;\npoint p = (1, 0);\n");
    let o = run(&["-f", path.to_str().unwrap(), "ortiz", "--prime", "p"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn non_rational_prime_with_chosen_free_variable() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_problem(
        &dir,
        "ring QQ[x1,x2];\nideal I = (x2 - x1^2)^2;\nideal p = x2 - x1^2;\nprimes = p;\n",
    );
    let o = run(&["-f", path.to_str().unwrap(), "noetherian", "--free-vars", "p=x1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let comp = &doc["components"][0];
    assert_eq!(comp["free_vars"], serde_json::json!(["x1"]));
    assert_eq!(comp["operators"], serde_json::json!(["1", "d_x2"]));
}
