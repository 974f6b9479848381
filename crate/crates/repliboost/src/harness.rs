//! Monte Carlo verification harness: paired-run replicability estimation,
//! exact-oracle invariant audits, and the named verify suites.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use repliboost_core::config::BoostConfig;
use repliboost_core::domain::{DistSource, Sample, SampleSource};
use repliboost_core::error::Error;
use repliboost_core::hypothesis::{Committee, MajorityVote};
use repliboost_core::measure::{reweighted_distribution, tv_distance};
use repliboost_core::rboost::{rboost_star, BoostTrace, LearnerKind, Mode, Problem};
use repliboost_core::rmeta::{compute_t, rmetaboost, MetaTrace};
use repliboost_core::rthreshold::{rthreshold, ThresholdParams};
use repliboost_core::sampling::{rejection_sample, RejectionSource};
use repliboost_core::tape::RandomTape;
use repliboost_core::weak::StumpGrid;
use repliboost_core::FiniteDistribution;

use crate::gen::{clustered_domain, margin_domain};

/// One full run for the artifact record: the final output, its exact error,
/// and the per-iteration trace.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RunReport {
    Boost {
        vote: MajorityVote,
        trace: BoostTrace,
    },
    Meta {
        committee: Committee,
        trace: MetaTrace,
    },
    Failed {
        error: String,
    },
}

impl RunReport {
    pub fn failed(&self) -> bool {
        matches!(self, RunReport::Failed { .. })
    }

    pub fn final_error(&self) -> Option<f64> {
        match self {
            RunReport::Boost { trace, .. } => Some(trace.final_error),
            RunReport::Meta { trace, .. } => Some(trace.final_error),
            RunReport::Failed { .. } => None,
        }
    }

    pub fn iterations(&self) -> usize {
        match self {
            RunReport::Boost { trace, .. } => trace.iterations.len(),
            RunReport::Meta { trace, .. } => trace.rounds,
            RunReport::Failed { .. } => 0,
        }
    }

    pub fn wl_calls(&self) -> usize {
        match self {
            RunReport::Boost { trace, .. } => trace.wl_calls,
            RunReport::Meta { trace, .. } => trace.wl_calls,
            RunReport::Failed { .. } => 0,
        }
    }
}

/// 95% Wilson score interval for a binomial rate.
pub fn wilson_interval(successes: usize, trials: usize) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959_963_984_540_054_f64;
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Half-width of the Wilson interval; the pass thresholds below are all
/// stated as (target - half-width).
pub fn wilson_halfwidth(successes: usize, trials: usize) -> f64 {
    let (lo, hi) = wilson_interval(successes, trials);
    (hi - lo) / 2.0
}

/// One paired trial: same shared tape, two independent data tapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairOutcome {
    Agree,
    Disagree,
    /// Both runs failed; excluded from both sides of the agreement rate and
    /// reported separately.
    BothFailed,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReplicabilityEstimate {
    pub pairs: usize,
    pub agree: usize,
    pub disagree: usize,
    pub both_failed: usize,
    /// agree / (pairs - both_failed).
    pub rate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

/// Runs `pairs` paired trials. Each pair `i` gets one shared tape
/// (`child("pair", i)` of the root seed) passed to both runs, and two
/// independent data tapes. A single failure counts as disagreement; a joint
/// failure is the third category.
pub fn estimate_replicability<K, F>(
    pairs: usize,
    seed: u64,
    run: F,
) -> Result<ReplicabilityEstimate, Error>
where
    K: Eq + Send,
    F: Fn(&RandomTape, RandomTape) -> Result<K, Error> + Sync,
{
    if pairs < 30 {
        return Err(Error::InvalidParameter(format!(
            "pairs = {pairs} must be at least 30"
        )));
    }
    let root = RandomTape::new(seed);
    let outcomes: Vec<PairOutcome> = (0..pairs as u64)
        .into_par_iter()
        .map(|i| {
            let shared = root.child("pair", i);
            let a = run(&shared, root.child("pair-data", 2 * i));
            let b = run(&shared, root.child("pair-data", 2 * i + 1));
            match (a, b) {
                (Ok(x), Ok(y)) if x == y => PairOutcome::Agree,
                (Ok(_), Ok(_)) => PairOutcome::Disagree,
                (Err(_), Err(_)) => PairOutcome::BothFailed,
                _ => PairOutcome::Disagree,
            }
        })
        .collect();
    let agree = outcomes.iter().filter(|o| **o == PairOutcome::Agree).count();
    let both_failed = outcomes
        .iter()
        .filter(|o| **o == PairOutcome::BothFailed)
        .count();
    let effective = pairs - both_failed;
    let disagree = effective - agree;
    let rate = if effective == 0 {
        0.0
    } else {
        agree as f64 / effective as f64
    };
    let (ci_low, ci_high) = wilson_interval(agree, effective.max(1));
    Ok(ReplicabilityEstimate {
        pairs,
        agree,
        disagree,
        both_failed,
        rate,
        ci_low,
        ci_high,
    })
}

/// Result of the exponential-weight audit.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExpWeightAudit {
    pub value: f64,
    pub bound: f64,
    pub passed: bool,
}

/// Exact summation of `E[exp(M_{T+1}(X))]` against the bound
/// `exp(2 T eps0) (1 + 1e-9)`. Runs whose inner error ever exceeded `eps0`
/// are excluded (the bound's precondition), not failed.
pub fn exp_weight_audit(
    trace: &MetaTrace,
    dist: &FiniteDistribution,
    eps0: f64,
) -> Result<ExpWeightAudit, Error> {
    if let Some(bad) = trace
        .iterations
        .iter()
        .find(|it| it.inner_error > eps0 + 1e-12)
    {
        return Err(Error::PreconditionUnmet(format!(
            "inner error {} at round {} exceeds eps0 = {eps0}",
            bad.inner_error, bad.t
        )));
    }
    if trace.final_m.len() != dist.len() {
        return Err(Error::DomainMismatch {
            left: trace.final_m.len(),
            right: dist.len(),
        });
    }
    let value: f64 = trace
        .final_m
        .iter()
        .enumerate()
        .map(|(x, &m)| (m as f64).exp() * dist.prob(x))
        .sum();
    let bound = (2.0 * trace.rounds as f64 * eps0).exp() * (1.0 + 1e-9);
    Ok(ExpWeightAudit {
        value,
        bound,
        passed: value <= bound,
    })
}

/// Invariant-audit outcome: how many inequalities were checked and which
/// (index, value) pairs violated them.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DensityAudit {
    pub checked: usize,
    pub violations: Vec<(usize, f64)>,
}

impl DensityAudit {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Halving bound on a smooth-booster trace: for every `t` and every
/// `k <= floor(1/gamma)`, `d(mu_{t+k}) >= d(mu_t) / 2`.
pub fn boost_density_audit(trace: &BoostTrace, gamma: f64) -> DensityAudit {
    let window = (1.0 / gamma).floor() as usize;
    let d: Vec<f64> = trace.iterations.iter().map(|it| it.density).collect();
    let mut checked = 0;
    let mut violations = Vec::new();
    for t in 0..d.len() {
        for k in 1..=window.min(d.len().saturating_sub(t + 1)) {
            checked += 1;
            if d[t + k] < d[t] / 2.0 - 1e-12 {
                violations.push((t + k, d[t + k]));
            }
        }
    }
    DensityAudit { checked, violations }
}

/// High-density bound on a meta trace: `d(mu_t) >= eps/32` for every round,
/// conditioned on all earlier threshold checks having succeeded (judged
/// against their recorded exact means); later rounds are skipped once a
/// check failed, per the lemma's conditioning.
pub fn meta_density_audit(trace: &MetaTrace, eps: f64) -> DensityAudit {
    let bound = eps / 32.0;
    let mut checked = 0;
    let mut violations = Vec::new();
    for it in &trace.iterations {
        checked += 1;
        if it.density < bound - 1e-12 {
            violations.push((it.t, it.density));
        }
        if !it.check.succeeded() {
            break;
        }
    }
    DensityAudit { checked, violations }
}

/// One named assertion with its evidence line.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: String) -> Self {
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

/// A named suite verdict: pass iff every check passed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteVerdict {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteVerdict {
    pub fn new(suite: &str, checks: Vec<Check>) -> Self {
        SuiteVerdict {
            suite: suite.into(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    pub fn check(&self, name: &str) -> &Check {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .unwrap_or_else(|| panic!("no check named {name} in suite {}", self.suite))
    }
}

/// Threshold-check parameters used by the threshold suite (the acceptance
/// configuration).
pub const SUITE_Z: f64 = 0.1;
pub const SUITE_RHO: f64 = 0.5;
pub const SUITE_DELTA: f64 = 0.05;
pub const SUITE_M: usize = 83_887;

fn bernoulli_items(mean: f64, m: usize, tape: &RandomTape) -> Vec<usize> {
    let mut stream = tape.child("bernoulli", 0).stream();
    (0..m).map(|_| (stream.next_f64() < mean) as usize).collect()
}

/// Correctness and replicability of the threshold check on synthetic
/// Bernoulli data at the acceptance parameters.
pub fn suite_threshold(trials: usize, pairs: usize, seed: u64) -> SuiteVerdict {
    let p = ThresholdParams::new(SUITE_Z, SUITE_RHO, SUITE_DELTA).unwrap();
    let root = RandomTape::new(seed);
    let run_bit = |mean: f64, tag: &str, i: u64| -> bool {
        let items = bernoulli_items(mean, SUITE_M, &root.child(tag, i).child("data", 0));
        let mut stream = root.child(tag, i).child("cutoff", 0).stream();
        rthreshold(&items, &p, |x| x as f64, &mut stream, 0)
            .unwrap()
            .bit
    };
    let mut checks = Vec::new();

    let low_zero = (0..trials as u64)
        .into_par_iter()
        .filter(|&i| !run_bit(0.05, "low", i))
        .count();
    let hw = wilson_halfwidth(low_zero, trials);
    let need = 0.95 - hw;
    let rate = low_zero as f64 / trials as f64;
    checks.push(Check::new(
        "low-mean-bit-zero",
        rate >= need,
        format!("mean 0.05: b=0 rate {rate:.4} over {trials} trials (need >= {need:.4})"),
    ));

    let high_one = (0..trials as u64)
        .into_par_iter()
        .filter(|&i| run_bit(0.2, "high", i))
        .count();
    let hw = wilson_halfwidth(high_one, trials);
    let need = 0.95 - hw;
    let rate = high_one as f64 / trials as f64;
    checks.push(Check::new(
        "high-mean-bit-one",
        rate >= need,
        format!("mean 0.2: b=1 rate {rate:.4} over {trials} trials (need >= {need:.4})"),
    ));

    // Adversarial replicability: true mean exactly at the threshold.
    let est = estimate_replicability(pairs, seed ^ 0x7472_6570, |shared, data| {
        let items = bernoulli_items(SUITE_Z, SUITE_M, &data);
        let mut stream = shared.child("cutoff", 0).stream();
        rthreshold(&items, &p, |x| x as f64, &mut stream, 0).map(|o| o.bit)
    })
    .unwrap();
    let hw = wilson_halfwidth(est.agree, est.pairs - est.both_failed);
    let need = (1.0 - SUITE_RHO) - hw;
    checks.push(Check::new(
        "adversarial-replicability",
        est.rate >= need,
        format!(
            "mean = z = {SUITE_Z}: agreement {:.4} over {} pairs (need >= {need:.4}, both-failed {})",
            est.rate, est.pairs, est.both_failed
        ),
    ));

    SuiteVerdict::new("threshold", checks)
}

/// Rejection-sampler fidelity: empirical TV against the exact reweighted
/// distribution, plus the accept-all identity.
pub fn suite_rejection(draws: usize, seed: u64) -> SuiteVerdict {
    let dist = FiniteDistribution::uniform(16).unwrap();
    let mu = |x: usize| (x + 1) as f64 / 16.0;
    let exact = reweighted_distribution(mu, &dist).unwrap();
    let root = RandomTape::new(seed);

    let mut source = DistSource::new(&dist, root.child("data", 0).stream());
    let mut lazy = RejectionSource::new(&mut source, mu, root.child("coins", 0).stream());
    let mut counts = vec![0.0f64; 16];
    for _ in 0..draws {
        counts[lazy.fresh_one().unwrap()] += 1.0;
    }
    let empirical = FiniteDistribution::from_weights(&counts).unwrap();
    let tv = tv_distance(&empirical, &exact).unwrap();
    let mut checks = vec![Check::new(
        "tv-fidelity",
        tv <= 0.05,
        format!("TV(empirical, exact D_mu) = {tv:.5} over {draws} accepted draws (need <= 0.05)"),
    )];

    let ids: Vec<usize> = (0..64).map(|i| i % 16).collect();
    let mut pool = Sample::new(ids.clone());
    let accepted = rejection_sample(&mut pool, 40, |_| 1.0, &mut root.child("all", 0).stream())
        .unwrap();
    checks.push(Check::new(
        "accept-all-identity",
        accepted == ids[..40],
        format!("accept-all returned the exact {}-item prefix", accepted.len()),
    ));

    SuiteVerdict::new("rejection", checks)
}

/// Smooth-booster correctness at the acceptance configuration (oracle weak
/// learner, exact-density termination), plus the scaled-measures invariant
/// on every trace.
pub fn suite_rboost_star(trials: usize, seed: u64) -> SuiteVerdict {
    let cfg = BoostConfig::new(0.5, 1.0 / 16.0, 0.1).unwrap();
    let cap = (cfg.c_iter / (cfg.eps * cfg.gamma * cfg.gamma)).ceil() as usize;
    let results: Vec<(f64, usize, BoostTrace)> = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let ld = margin_domain(64, 0.1, seed.wrapping_add(i)).unwrap();
            let grid = StumpGrid::from_domain(&ld.domain, 32);
            let p = Problem {
                domain: &ld.domain,
                dist: &ld.dist,
                target: &ld.target,
                grid: &grid,
            };
            let tape = RandomTape::new(seed).child("rb-trial", i);
            let mut empty = Sample::new(vec![]);
            let (_, trace) =
                rboost_star(&p, &cfg, Mode::Exact, LearnerKind::Oracle, &mut empty, &tape)
                    .unwrap();
            (trace.final_error, trace.iterations.len(), trace)
        })
        .collect();

    let ok = results.iter().filter(|(e, _, _)| *e <= cfg.eps + 1e-12).count();
    let max_iters = results.iter().map(|(_, n, _)| *n).max().unwrap_or(0);
    let rate = ok as f64 / trials as f64;
    let mut checks = vec![
        Check::new(
            "error-rate",
            ok * 100 >= trials * 95,
            format!("er <= 1/16 in {ok}/{trials} trials (rate {rate:.3}, need >= 0.95)"),
        ),
        Check::new(
            "iteration-cap",
            max_iters <= cap,
            format!("max iterations {max_iters} (cap {cap})"),
        ),
    ];

    let mut checked = 0;
    let mut violations = 0;
    for (_, _, trace) in &results {
        let audit = boost_density_audit(trace, cfg.gamma);
        checked += audit.checked;
        violations += audit.violations.len();
    }
    checks.push(Check::new(
        "scaled-measures",
        violations == 0,
        format!("halving bound: {violations} violations over {checked} (t,k) pairs"),
    ));

    SuiteVerdict::new("rboost-star", checks)
}

/// Meta-booster correctness at the acceptance configuration, plus the
/// high-density invariant and the exponential-weight audit on its traces.
pub fn suite_rmetaboost(trials: usize, seed: u64) -> SuiteVerdict {
    let cfg = BoostConfig::new(0.5, 0.1, 0.1).unwrap();
    let rounds = compute_t(cfg.eps).unwrap();
    let inner_cap = (cfg.c_iter / (cfg.eps0 * cfg.gamma * cfg.gamma)).ceil() as usize;
    let results: Vec<(MetaTrace, FiniteDistribution)> = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let ld = margin_domain(64, 0.1, seed.wrapping_add(0x1000 + i)).unwrap();
            let grid = StumpGrid::from_domain(&ld.domain, 32);
            let p = Problem {
                domain: &ld.domain,
                dist: &ld.dist,
                target: &ld.target,
                grid: &grid,
            };
            let tape = RandomTape::new(seed).child("meta-trial", i);
            let mut empty = Sample::new(vec![]);
            let (_, trace) =
                rmetaboost(&p, &cfg, Mode::Exact, LearnerKind::Oracle, &mut empty, &tape)
                    .unwrap();
            (trace, ld.dist)
        })
        .collect();

    let mut checks = Vec::new();
    let rounds_ok = rounds == 24 && results.iter().all(|(t, _)| t.rounds == 24);
    checks.push(Check::new(
        "round-count",
        rounds_ok,
        format!("eps = 0.1 gives T = {rounds} (need exactly 24)"),
    ));

    let ok = results
        .iter()
        .filter(|(t, _)| t.final_error <= cfg.eps + 1e-12)
        .count();
    let hw = wilson_halfwidth(ok, trials);
    let need = (1.0 - cfg.rho) - hw;
    let rate = ok as f64 / trials as f64;
    checks.push(Check::new(
        "error-rate",
        rate >= need,
        format!("er <= 0.1 in {ok}/{trials} trials (rate {rate:.3}, need >= {need:.3})"),
    ));

    let max_wl = results.iter().map(|(t, _)| t.wl_calls).max().unwrap_or(0);
    let wl_bound = rounds * inner_cap;
    checks.push(Check::new(
        "wl-cap",
        max_wl <= wl_bound,
        format!("max weak-learner calls {max_wl} (bound {wl_bound})"),
    ));

    let mut checked = 0;
    let mut violations = 0;
    for (trace, _) in &results {
        let audit = meta_density_audit(trace, cfg.eps);
        checked += audit.checked;
        violations += audit.violations.len();
    }
    checks.push(Check::new(
        "high-density",
        violations == 0,
        format!(
            "d(mu_t) >= eps/32 = {}: {violations} violations over {checked} rounds",
            cfg.eps / 32.0
        ),
    ));

    let mut audited = 0;
    let mut excluded = 0;
    let mut exp_violations = 0;
    let mut max_value = 0.0f64;
    for (trace, dist) in &results {
        match exp_weight_audit(trace, dist, cfg.eps0) {
            Ok(a) => {
                audited += 1;
                max_value = max_value.max(a.value);
                if !a.passed {
                    exp_violations += 1;
                }
            }
            Err(Error::PreconditionUnmet(_)) => excluded += 1,
            Err(e) => panic!("unexpected audit error {e:?}"),
        }
    }
    checks.push(Check::new(
        "exp-weight",
        exp_violations == 0 && audited > 0,
        format!(
            "E[exp(M)] max {max_value:.4} over {audited} eligible runs ({excluded} excluded), bound e^3 = {:.4}",
            (3.0f64).exp()
        ),
    ));

    SuiteVerdict::new("rmetaboost", checks)
}

/// Configuration of the sampled-mode end-to-end smoke run: desk-scale
/// budgets with floors chosen so subroutine noise stays well below the
/// replicability target.
pub fn smoke_config() -> BoostConfig {
    let mut cfg = BoostConfig::new(0.5, 0.5, 0.25).unwrap();
    cfg.budget_scale = 1e-12;
    cfg.floor_weak = 512;
    cfg.floor_rejection = 50_000;
    cfg.floor_threshold = 200_000;
    cfg
}

/// End-to-end replicability: a deterministic exact-mode control (rate must
/// be exactly 1) and the sampled-mode meta-booster smoke on the clustered
/// domain.
pub fn suite_replicability(pairs: usize, seed: u64) -> SuiteVerdict {
    let ld = clustered_domain();
    let grid = StumpGrid::from_domain(&ld.domain, 32);
    let p = Problem {
        domain: &ld.domain,
        dist: &ld.dist,
        target: &ld.target,
        grid: &grid,
    };
    let mut checks = Vec::new();

    let cfg = BoostConfig::new(0.5, 0.1, 0.1).unwrap();
    let det = estimate_replicability(30, seed ^ 0xdeed, |shared, _data| {
        let mut empty = Sample::new(vec![]);
        rboost_star(&p, &cfg, Mode::Exact, LearnerKind::Oracle, &mut empty, shared)
            .map(|(v, _)| v)
    })
    .unwrap();
    checks.push(Check::new(
        "deterministic-exact",
        det.rate == 1.0 && det.both_failed == 0,
        format!("exact-mode oracle agreement {:.4} (need exactly 1)", det.rate),
    ));

    let cfg = smoke_config();
    let run_one = |shared: &RandomTape, data: RandomTape| {
        let mut source = DistSource::new(&ld.dist, data.child("draws", 0).stream());
        rmetaboost(
            &p,
            &cfg,
            Mode::Sampled,
            LearnerKind::Stump,
            &mut source,
            shared,
        )
        .map(|(c, _)| c)
    };
    let start = Instant::now();
    let probe = RandomTape::new(seed ^ 0x70726f62);
    let _ = run_one(&probe.child("pair", 0), probe.child("pair-data", 0));
    let _ = run_one(&probe.child("pair", 0), probe.child("pair-data", 1));
    let pair_secs = start.elapsed().as_secs_f64();
    checks.push(Check::new(
        "pair-runtime",
        pair_secs <= 5.0,
        format!("one sampled pair took {pair_secs:.2} s (need <= 5)"),
    ));

    let est = estimate_replicability(pairs, seed ^ 0x736d6f6b, run_one).unwrap();
    let hw = wilson_halfwidth(est.agree, est.pairs - est.both_failed);
    let need = (1.0 - cfg.rho) - hw;
    checks.push(Check::new(
        "sampled-smoke",
        est.rate >= need,
        format!(
            "sampled rMetaBoost agreement {:.4} over {} pairs (need >= {need:.4}, both-failed {})",
            est.rate, est.pairs, est.both_failed
        ),
    ));

    SuiteVerdict::new("replicability", checks)
}

/// Effort knobs for the named suites (the CLI defaults are desk-scale).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Effort {
    pub trials: usize,
    pub pairs: usize,
    pub draws: usize,
}

impl Default for Effort {
    fn default() -> Self {
        Effort {
            trials: 100,
            pairs: 100,
            draws: 100_000,
        }
    }
}

/// Runs one named suite. Unknown names are an error.
pub fn run_suite(name: &str, effort: Effort, seed: u64) -> Result<SuiteVerdict, Error> {
    match name {
        "threshold" => Ok(suite_threshold(effort.trials.max(100), effort.pairs, seed)),
        "rejection" => Ok(suite_rejection(effort.draws, seed)),
        "rboost-star" => Ok(suite_rboost_star(effort.trials, seed)),
        "rmetaboost" => Ok(suite_rmetaboost(effort.trials, seed)),
        "replicability" => Ok(suite_replicability(effort.pairs, seed)),
        other => Err(Error::InvalidParameter(format!("unknown suite {other}"))),
    }
}

/// All suite names in canonical order.
pub const SUITES: [&str; 5] = [
    "threshold",
    "rejection",
    "rboost-star",
    "rmetaboost",
    "replicability",
];
