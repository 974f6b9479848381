//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line with its evidence. Suites shared by several criteria run
//! once and are reused.

use std::fs;
use std::sync::OnceLock;

use repliboost::experiment::{run_experiment, Algorithm, ExperimentConfig};
use repliboost::gen::margin_domain;
use repliboost::harness::{
    suite_rboost_star, suite_rejection, suite_replicability, suite_rmetaboost, suite_threshold,
    Check, SuiteVerdict,
};
use repliboost::io::save_domain;
use repliboost_core::rboost::{LearnerKind, Mode};

const SEED: u64 = 20260823;

fn threshold_suite() -> &'static SuiteVerdict {
    static V: OnceLock<SuiteVerdict> = OnceLock::new();
    V.get_or_init(|| suite_threshold(500, 500, SEED))
}

fn rboost_suite() -> &'static SuiteVerdict {
    static V: OnceLock<SuiteVerdict> = OnceLock::new();
    V.get_or_init(|| suite_rboost_star(100, SEED))
}

fn rmeta_suite() -> &'static SuiteVerdict {
    static V: OnceLock<SuiteVerdict> = OnceLock::new();
    V.get_or_init(|| suite_rmetaboost(100, SEED))
}

fn replicability_suite() -> &'static SuiteVerdict {
    static V: OnceLock<SuiteVerdict> = OnceLock::new();
    V.get_or_init(|| suite_replicability(100, SEED))
}

fn report(criterion: u32, label: &str, checks: &[&Check]) {
    let passed = checks.iter().all(|c| c.passed);
    let detail: Vec<&str> = checks.iter().map(|c| c.detail.as_str()).collect();
    println!(
        "criterion {criterion} [{}] {label}: {}",
        if passed { "PASS" } else { "FAIL" },
        detail.join("; ")
    );
    assert!(passed, "criterion {criterion} failed: {}", detail.join("; "));
}

#[test]
fn criterion_01_rthreshold_correctness() {
    let v = threshold_suite();
    report(
        1,
        "rThreshold correctness",
        &[v.check("low-mean-bit-zero"), v.check("high-mean-bit-one")],
    );
}

#[test]
fn criterion_02_rthreshold_replicability() {
    let v = threshold_suite();
    report(
        2,
        "rThreshold replicability",
        &[v.check("adversarial-replicability")],
    );
}

#[test]
fn criterion_03_rejection_sampler_fidelity() {
    let v = suite_rejection(100_000, SEED);
    report(
        3,
        "RejectionSampler fidelity",
        &[v.check("tv-fidelity"), v.check("accept-all-identity")],
    );
}

#[test]
fn criterion_04_rboost_star_correctness() {
    let v = rboost_suite();
    report(
        4,
        "rBoost* correctness",
        &[v.check("error-rate"), v.check("iteration-cap")],
    );
}

#[test]
fn criterion_05_scaled_measures_invariant() {
    let v = rboost_suite();
    report(5, "scaled-measures invariant", &[v.check("scaled-measures")]);
}

#[test]
fn criterion_06_rmetaboost_correctness() {
    let v = rmeta_suite();
    report(
        6,
        "rMetaBoost correctness",
        &[v.check("round-count"), v.check("error-rate"), v.check("wl-cap")],
    );
}

#[test]
fn criterion_07_high_density_invariant() {
    let v = rmeta_suite();
    report(7, "high-density invariant", &[v.check("high-density")]);
}

#[test]
fn criterion_08_exponential_weight_audit() {
    let v = rmeta_suite();
    report(8, "exponential-weight audit", &[v.check("exp-weight")]);
}

#[test]
fn criterion_09_end_to_end_replicability_smoke() {
    let v = replicability_suite();
    report(
        9,
        "end-to-end replicability smoke",
        &[
            v.check("deterministic-exact"),
            v.check("pair-runtime"),
            v.check("sampled-smoke"),
        ],
    );
}

#[test]
fn criterion_10_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let ld = margin_domain(32, 0.1, SEED).unwrap();
    save_domain(&dir.path().join("domain.json"), &ld).unwrap();
    let mut cfg = ExperimentConfig {
        algorithm: Algorithm::Rmetaboost,
        rho: 0.5,
        eps: 0.2,
        gamma: 0.1,
        mode: Mode::Exact,
        learner: LearnerKind::Oracle,
        budget_scale: 1.0,
        floor_weak: 0,
        floor_threshold: 0,
        floor_rejection: 0,
        grid_resolution: 32,
        trials: 3,
        domain: dir.path().join("domain.json"),
        seed: SEED,
        out_dir: dir.path().join("a"),
    };
    run_experiment(&cfg).unwrap();
    cfg.out_dir = dir.path().join("b");
    run_experiment(&cfg).unwrap();
    let a = fs::read(dir.path().join("a/summary.csv")).unwrap();
    let b = fs::read(dir.path().join("b/summary.csv")).unwrap();
    let passed = a == b && !a.is_empty();
    println!(
        "criterion 10 [{}] determinism: rerun summary CSVs byte-identical ({} bytes)",
        if passed { "PASS" } else { "FAIL" },
        a.len()
    );
    assert!(passed);
}
