//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

mod common;

use std::time::{Duration, Instant};

use common::props;
use common::{brute_indecomposables, brute_support_pairs, data_path, test_algebras};
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use taulab::homological::{ar_translate, projective_resolution, stable_hom_dim};
use taulab::lab::enumerate::{enumerate_indecomposables, enumerate_support_tau_tilting};
use taulab::lab::predicates::Bounds;
use taulab::lab::suite::{verify_theorem_suite, CheckStatus, VerificationReport};

const DIM_BOUND: usize = 4;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn golden_injective_simple() -> Outcome {
    let start = Instant::now();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let alg = data_path("a3_zero_relation.alg");
    let module = data_path("a3_zero_relation_s1.mod");
    let code = taulab::cli::run(
        [
            "taulab",
            "check",
            "--algebra",
            alg.to_str().unwrap(),
            "--module",
            module.to_str().unwrap(),
            "--props",
            "injective,support-tau-tilting,tau-tilting,partial-tilting",
        ],
        &mut out,
        &mut err,
    );
    let elapsed = start.elapsed();
    let text = String::from_utf8(out).unwrap();
    let expected = "injective: true\nsupport-tau-tilting: true\ntau-tilting: false\npartial-tilting: false\npd: 2\n";
    let ok = code == 0 && text == expected && elapsed < Duration::from_secs(1);
    outcome(ok, format!("S(1): {} in {}", text.trim_end().replace('\n', ", "), secs(elapsed)))
}

fn ar_formula() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (name, alg) in test_algebras() {
        let start = Instant::now();
        let indecs = enumerate_indecomposables(&alg, DIM_BOUND).unwrap();
        let mut mismatches = 0;
        for m in &indecs {
            let res = projective_resolution(m, 2);
            let tau = ar_translate(m);
            for n in &indecs {
                if res.ext_dim(n, 1).unwrap() != stable_hom_dim(n, &tau).unwrap() {
                    mismatches += 1;
                }
            }
        }
        let elapsed = start.elapsed();
        ok &= mismatches == 0 && elapsed < Duration::from_secs(60);
        notes.push(format!("{name}: {} pairs, {mismatches} mismatches, {}", indecs.len().pow(2), secs(elapsed)));
    }
    outcome(ok, notes.join("; "))
}

fn checks_pass(reports: &[(String, VerificationReport, Duration)], names: &[&str], limit: Duration) -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (alg, report, elapsed) in reports {
        let mut parts = Vec::new();
        for name in names {
            let check = report.check(name).expect("check is reported");
            ok &= check.status == CheckStatus::Pass;
            parts.push(format!(
                "{} cases {} fail {} inconclusive {}",
                name,
                check.cases,
                check.failures.len(),
                check.inconclusive.len()
            ));
        }
        ok &= *elapsed < limit;
        notes.push(format!("{alg} [{}] ({})", parts.join(", "), secs(*elapsed)));
    }
    outcome(ok, notes.join("; "))
}

fn enumeration_counts() -> Outcome {
    let algs = test_algebras();
    let a2 = &algs[0].1;
    let zero = &algs[2].1;
    let a2_ind = enumerate_indecomposables(a2, 2).unwrap();
    let a2_stt = enumerate_support_tau_tilting(a2, &a2_ind).unwrap().len();
    let zero_ind = enumerate_indecomposables(zero, 3).unwrap().len();
    let oracle = (
        brute_indecomposables(a2, 2).len(),
        brute_support_pairs(a2, &brute_indecomposables(a2, 2)).len(),
        brute_indecomposables(zero, 3).len(),
    );
    let found = (a2_ind.len(), a2_stt, zero_ind);
    outcome(
        found == (3, 5, 5) && oracle == found,
        format!(
            "A2 indecomposables {} and support tau-tilting {}, zero-relation indecomposables {}; oracle {oracle:?}",
            found.0, found.1, found.2
        ),
    )
}

const PROPERTY_CASES: u32 = 64;

/// A fresh seeded runner per property: a runner's success count carries over between runs.
fn run_property<S: Strategy>(strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let config = Config { cases: PROPERTY_CASES, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn infrastructure() -> Outcome {
    let start = Instant::now();
    let results = [
        ("rank-nullity", run_property(props::matrix(5), |m| props::rank_nullity(&m))),
        (
            "subspace dimensions",
            run_property((props::matrix(2), props::matrix(2)), |(a, b)| props::subspace_dimensions(&a, &b)),
        ),
        (
            "decompose-reconstruction",
            run_property(props::module(props::a3(), 2), |m| props::decomposition_reconstructs(&m)),
        ),
        (
            "radical self-certification",
            run_property(props::module(props::cyclic(), 2), |m| props::radical_certifies_itself(&m)),
        ),
        (
            "Hom/Ext additivity",
            run_property(
                (
                    props::module(props::zero_rel(), 1),
                    props::module(props::zero_rel(), 1),
                    props::module(props::zero_rel(), 2),
                ),
                |(m, n, x)| props::hom_ext_additive(&m, &n, &x),
            ),
        ),
        (
            "dimension shifting",
            run_property((props::module(props::cyclic(), 2), props::module(props::cyclic(), 1)), |(m, n)| {
                props::dimension_shifting(&m, &n)
            }),
        ),
    ];
    let elapsed = start.elapsed();
    let failed: Vec<String> =
        results.iter().filter_map(|(name, r)| r.as_ref().err().map(|e| format!("{name}: {e}"))).collect();
    let ok = failed.is_empty() && elapsed < Duration::from_secs(120);
    let detail = if failed.is_empty() {
        format!("{} properties x {PROPERTY_CASES} cases green in {}", results.len(), secs(elapsed))
    } else {
        failed.join("; ")
    };
    outcome(ok, detail)
}

fn main() {
    let reports: Vec<(String, VerificationReport, Duration)> = test_algebras()
        .into_iter()
        .map(|(name, alg)| {
            let start = Instant::now();
            let report = verify_theorem_suite(&alg, name, DIM_BOUND, Bounds::default()).unwrap();
            (name.to_string(), report, start.elapsed())
        })
        .collect();
    let five_minutes = Duration::from_secs(300);
    let criteria: Vec<(&str, Outcome)> = vec![
        ("injective simple of the zero-relation algebra", golden_injective_simple()),
        ("AR formula on all enumerated pairs", ar_formula()),
        ("tilting <=> Fac/Ext criterion", checks_pass(&reports, &["tilting_iff_fac_ext_vanishing"], five_minutes)),
        (
            "tau-tilting of finite pd: tilting <=> self-orthogonal",
            checks_pass(&reports, &["tau_tilting_finite_pd_tilting_iff_self_orthogonal"], five_minutes),
        ),
        (
            "torsion pair, approximation, add-resolution, Hom-detection, Fac-in-perp suites",
            checks_pass(
                &reports,
                &[
                    "torsion_pair_iff_tau_tilting",
                    "approximation_kernel_hom_vanishing",
                    "add_resolution_kernels_in_fac",
                    "hom_detects_nonzero_in_ext1_perp",
                    "fac_inside_ext_perp",
                ],
                five_minutes,
            ),
        ),
        ("enumeration counts against exhaustive oracles", enumeration_counts()),
        ("infrastructure invariants", infrastructure()),
    ];
    let mut failures = 0;
    for (i, (title, o)) in criteria.iter().enumerate() {
        let status = if o.passed { "PASS" } else { "FAIL" };
        failures += usize::from(!o.passed);
        println!("criterion {}: {status} - {title}: {}", i + 1, o.detail);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
