//! The command line, driven through `cli::run`.

mod common;

use common::data_path;
use taulab::cli::{run, EXIT_OK, EXIT_USAGE};

fn taulab(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("taulab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(name: &str) -> String {
    data_path(name).to_string_lossy().into_owned()
}

#[test]
fn build_prints_dimension_and_basis() {
    let (code, out, _) = taulab(&["build", "--algebra", &path("a3_zero_relation.alg")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("dim: 5"));
    assert!(out.contains("basis: e1 e2 e3 a1 a2"));
}

#[test]
fn check_reports_the_injective_simple() {
    let (code, out, _) = taulab(&[
        "check",
        "--algebra",
        &path("a3_zero_relation.alg"),
        "--module",
        &path("a3_zero_relation_s1.mod"),
        "--props",
        "support-tau-tilting,tau-tilting,tilting,partial-tilting,injective",
    ]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        [
            "support-tau-tilting: true",
            "tau-tilting: false",
            "tilting: false",
            "partial-tilting: false",
            "injective: true",
            "pd: 2"
        ]
    );
}

#[test]
fn unknown_at_bound_is_reported() {
    let (code, out, _) = taulab(&[
        "check",
        "--algebra",
        &path("nakayama_cyclic3.alg"),
        "--module",
        &path("a3_zero_relation_s1.mod"),
        "--props",
        "tilting,self-orthogonal",
        "--ext-bound",
        "3",
        "--l-max",
        "4",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("pd: >= 5"), "{out}");
    assert!(out.contains("tilting: false"), "{out}");
}

#[test]
fn compute_verbs() {
    let alg = path("a3_zero_relation.alg");
    let s1 = path("a3_zero_relation_s1.mod");
    let p1 = path("a3_zero_relation_p1.mod");
    let (_, out, _) = taulab(&["compute", "tau", "--algebra", &alg, "--module", &s1]);
    assert!(out.contains("dim vector: (0, 1, 0)"));
    let (_, out, _) = taulab(&["compute", "pd", "--algebra", &alg, "--module", &s1]);
    assert_eq!(out.trim(), "pd: 2");
    let (_, out, _) = taulab(&["compute", "resolution", "--algebra", &alg, "--module", &s1]);
    assert_eq!(out, "P0: P(1)\nP1: P(2)\nP2: P(3)\npd: 2\n");
    let (_, out, _) = taulab(&["compute", "ext", "--algebra", &alg, "--module", &s1, "--other", &p1, "--degree", "1"]);
    assert_eq!(out.trim(), "dim Ext^1: 0");
    let (_, out, _) = taulab(&["compute", "trace", "--algebra", &alg, "--module", &p1, "--other", &s1]);
    assert!(out.contains("dim vector: (1, 0, 0)"));
    let (code, out, _) = taulab(&["compute", "approx", "--algebra", &alg, "--module", &p1, "--other", &s1]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("surjective: true"));
}

#[test]
fn enumerate_counts() {
    let (_, out, _) = taulab(&["enumerate", "indecomposables", "--algebra", &path("a2.alg"), "--max-dim", "2"]);
    assert!(out.starts_with("3 indecomposables"));
    let (_, out, _) = taulab(&["enumerate", "stau-tilting", "--algebra", &path("a2.alg"), "--max-dim", "2"]);
    assert!(out.starts_with("5 support tau-tilting modules"));
}

#[test]
fn verify_writes_a_deterministic_report() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let second = dir.path().join("second.json");
    for target in [&first, &second] {
        let (code, out, _) = taulab(&["verify", "--algebra", &path("a2.alg"), "--report", target.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("all checks passed: true"));
    }
    let a = std::fs::read(&first).unwrap();
    assert_eq!(a, std::fs::read(&second).unwrap());
    let report: taulab::lab::VerificationReport = serde_json::from_slice(&a).unwrap();
    assert!(report.all_passed);
    assert_eq!(report.counts.indecomposables, 3);
    assert!(report.elapsed_ms.is_none());
}

#[test]
fn malformed_inputs_exit_with_usage_code() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "field 2\nvertex 1\nvertex 1\n").unwrap();
    let (code, _, err) = taulab(&["build", "--algebra", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 3"), "{err}");

    std::fs::write(&bad, "field 2\nvertex 1\narrow x 1 1\n").unwrap();
    let (code, _, err) = taulab(&["build", "--algebra", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("x.x"), "{err}");

    let (code, _, _) = taulab(&["compute", "frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = taulab(&["build", "--algebra", "/nonexistent.alg"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, out, _) = taulab(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
}
