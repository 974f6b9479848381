//! The modified smooth booster: rejection-sampled weak-learner calls,
//! additive margin updates, exponential-decay reweighing, and a periodic
//! replicable threshold check for termination.

use alloc::vec;
use alloc::vec::Vec;

use crate::config::BoostConfig;
use crate::domain::{Domain, FiniteDistribution, Sample, SampleSource, TargetFunction};
use crate::error::Error;
use crate::hypothesis::{Hypothesis, MajorityVote};
use crate::math;
use crate::measure::{density, exact_error, reweighted_distribution};
use crate::rthreshold::{rthreshold, threshold_sample_size, ThresholdParams};
use crate::sampling::{rejection_input_size, rejection_sample};
use crate::tape::RandomTape;
use crate::weak::{oracle_stump_learner, replicable_stump_learner, weak_sample_size, StumpGrid};

/// The exponential-decay reweighing: 1 on nonpositive margin surplus,
/// `(1-gamma)^(g/2)` otherwise. Always in (0,1].
pub fn mu_star(g_value: f64, gamma: f64) -> f64 {
    if g_value <= 0.0 {
        1.0
    } else {
        math::powf(1.0 - gamma, g_value / 2.0)
    }
}

/// The per-iteration function description: hypotheses so far plus the
/// margin deduction. `g` and `mu` are evaluated lazily per point.
#[derive(Debug, Clone, PartialEq)]
pub struct BoostState {
    pub hypotheses: Vec<Hypothesis>,
    pub gamma: f64,
}

impl BoostState {
    pub fn new(gamma: f64) -> Self {
        BoostState {
            hypotheses: Vec::new(),
            gamma,
        }
    }

    /// Margin deduction `theta = gamma / (2 + gamma)`.
    pub fn theta(&self) -> f64 {
        self.gamma / (2.0 + self.gamma)
    }

    /// `g(x) = sum_s (h_s(x) f(x) - theta)`, with `g = 0` for no hypotheses.
    pub fn g(&self, domain: &Domain, target: &TargetFunction, x: usize) -> f64 {
        let theta = self.theta();
        self.hypotheses
            .iter()
            .map(|h| (h.predict(domain, x) * target.label(x)) as f64 - theta)
            .sum()
    }

    pub fn mu(&self, domain: &Domain, target: &TargetFunction, x: usize) -> f64 {
        mu_star(self.g(domain, target, x), self.gamma)
    }
}

/// The immutable inputs of a boosting run.
#[derive(Debug, Clone, Copy)]
pub struct Problem<'a> {
    pub domain: &'a Domain,
    pub dist: &'a FiniteDistribution,
    pub target: &'a TargetFunction,
    pub grid: &'a StumpGrid,
}

/// Exact mode substitutes the exact-density oracle for the sampled
/// termination check (unit isolation); sampled mode runs the full pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Mode {
    Exact,
    Sampled,
}

/// Which weak learner backs the run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum LearnerKind {
    Oracle,
    Stump,
}

/// One termination-check record: the bit plus the evidence, and the exact
/// expectation of the tested function so the harness can condition on
/// check success after the fact.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ThresholdCheckRecord {
    pub z: f64,
    pub bit: bool,
    pub phi_mean: f64,
    /// Randomly placed cutoff; absent in exact mode.
    pub cutoff: Option<f64>,
    pub exact_mean: f64,
}

impl ThresholdCheckRecord {
    /// Whether the bit is consistent with the contract bullets, judged
    /// against the exact expectation. Means strictly between `z/2` and `2z`
    /// are unconstrained and count as success.
    pub fn succeeded(&self) -> bool {
        if self.exact_mean <= self.z / 2.0 {
            !self.bit
        } else if self.exact_mean >= 2.0 * self.z {
            self.bit
        } else {
            true
        }
    }
}

/// Per-iteration trace entry.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoostIterRecord {
    pub t: usize,
    /// Exact density of the measure used for this iteration's sampling.
    pub density: f64,
    /// Exact error of this iteration's weak hypothesis under the reweighted
    /// distribution it was trained against.
    pub weak_error: f64,
    pub check: Option<ThresholdCheckRecord>,
    pub consumed_after: usize,
}

/// Full audit trace of one run.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoostTrace {
    pub iterations: Vec<BoostIterRecord>,
    pub wl_calls: usize,
    pub consumed: usize,
    pub iteration_cap: usize,
    pub weak_rho: f64,
    pub final_error: f64,
}

/// Internal size/allocation plan for one run.
pub(crate) struct BoostPlan {
    pub t_cap: usize,
    pub cadence: usize,
    pub weak_rho: f64,
    pub weak_required: usize,
    pub weak_m: usize,
    pub rejection_m: usize,
    pub thresh: ThresholdParams,
    pub thresh_required: usize,
    pub thresh_m: usize,
}

pub(crate) fn plan(cfg: &BoostConfig, grid: &StumpGrid) -> Result<BoostPlan, Error> {
    cfg.validate()?;
    let t_cap = math::ceil_count(cfg.c_iter / (cfg.eps * cfg.gamma * cfg.gamma)).max(1);
    let cadence = (math::floor(1.0 / cfg.gamma) as usize).max(1);
    // The weak learner runs once per iteration; the threshold check runs
    // once per cadence window. Both budgets follow the worst-case round
    // count.
    let weak_rho = cfg.rho / (6.0 * t_cap as f64);
    let checks = cfg.gamma * t_cap as f64;
    let thresh_rho = cfg.rho / (6.0 * checks);
    let thresh_delta = (cfg.rho / (48.0 * checks)).min(thresh_rho / 8.0);
    let thresh = ThresholdParams::new(cfg.eps / 2.0, thresh_rho, thresh_delta)?;
    let thresh_required = threshold_sample_size(
        thresh.z,
        thresh.rho,
        thresh.delta,
        cfg.c_threshold,
        cfg.budget_scale,
    )?;
    let weak_required = weak_sample_size(weak_rho, cfg.gamma, grid.len(), cfg.budget_scale)?;
    let weak_m = weak_required.max(cfg.floor_weak).max(1);
    let rejection_delta = cfg.rho / (6.0 * t_cap as f64);
    let rejection_m = rejection_input_size(
        weak_m,
        cfg.eps,
        rejection_delta,
        cfg.rejection_factor,
        cfg.budget_scale,
    )?
    .max(cfg.floor_rejection)
    .max(weak_m);
    Ok(BoostPlan {
        t_cap,
        cadence,
        weak_rho,
        weak_required,
        weak_m,
        rejection_m,
        thresh,
        thresh_required,
        thresh_m: thresh_required.max(cfg.floor_threshold).max(1),
    })
}

/// Runs the smooth booster.
///
/// `cfg.eps` is this run's target error (the meta booster passes its inner
/// error here) and `cfg.rho` its replicability budget. The tape must be
/// dedicated to this run; all subroutine streams are derived from it.
pub fn rboost_star(
    p: &Problem<'_>,
    cfg: &BoostConfig,
    mode: Mode,
    learner: LearnerKind,
    source: &mut dyn SampleSource,
    tape: &RandomTape,
) -> Result<(MajorityVote, BoostTrace), Error> {
    let plan = plan(cfg, p.grid)?;
    let n = p.domain.len();
    let theta = cfg.gamma / (2.0 + cfg.gamma);

    let mut g = vec![0.0f64; n];
    let mut hypotheses: Vec<Hypothesis> = Vec::new();
    let mut iterations: Vec<BoostIterRecord> = Vec::new();

    for t in 1..=plan.t_cap {
        let mu_table: Vec<f64> = g.iter().map(|&gv| mu_star(gv, cfg.gamma)).collect();
        let mu = |x: usize| mu_table[x];
        let d = density(mu, p.dist);
        let d_mu = reweighted_distribution(mu, p.dist)
            .map_err(|e| Error::in_iteration(t, "reweigh", e))?;

        let h = match learner {
            LearnerKind::Oracle => {
                oracle_stump_learner(&d_mu, p.target, p.domain, p.grid, cfg.gamma)
                    .map_err(|e| Error::in_iteration(t, "weak", e))?
            }
            LearnerKind::Stump => {
                let inputs = source
                    .fresh(plan.rejection_m)
                    .map_err(|e| Error::in_iteration(t, "sample", e))?;
                let mut pool = Sample::new(inputs);
                let accepted = rejection_sample(
                    &mut pool,
                    plan.weak_m,
                    mu,
                    &mut tape.child("rb-reject", t as u64).stream(),
                )
                .map_err(|e| Error::in_iteration(t, "reject", e))?;
                replicable_stump_learner(
                    &accepted,
                    p.domain,
                    p.target,
                    cfg.gamma,
                    plan.weak_rho,
                    p.grid,
                    &mut tape.child("rb-wl", t as u64).stream(),
                    cfg.budget_scale,
                    plan.weak_required.min(plan.weak_m),
                )
                .map_err(|e| Error::in_iteration(t, "weak", e))?
            }
        };
        let weak_error = exact_error(|x| h.predict(p.domain, x), &d_mu, p.target);
        for x in 0..n {
            g[x] += (h.predict(p.domain, x) * p.target.label(x)) as f64 - theta;
        }
        hypotheses.push(h);

        let mut check = None;
        let mut stop = false;
        if t % plan.cadence == 0 {
            // The check tests the measure this iteration sampled from.
            let rec = match mode {
                Mode::Exact => ThresholdCheckRecord {
                    z: plan.thresh.z,
                    bit: d > plan.thresh.z,
                    phi_mean: d,
                    cutoff: None,
                    exact_mean: d,
                },
                Mode::Sampled => {
                    let items = source
                        .fresh(plan.thresh_m)
                        .map_err(|e| Error::in_iteration(t, "sample", e))?;
                    let out = rthreshold(
                        &items,
                        &plan.thresh,
                        mu,
                        &mut tape.child("rb-thresh", t as u64).stream(),
                        plan.thresh_required.min(plan.thresh_m),
                    )
                    .map_err(|e| Error::in_iteration(t, "thresh", e))?;
                    ThresholdCheckRecord {
                        z: plan.thresh.z,
                        bit: out.bit,
                        phi_mean: out.phi_mean,
                        cutoff: Some(out.cutoff),
                        exact_mean: d,
                    }
                }
            };
            stop = !rec.bit;
            check = Some(rec);
        }

        iterations.push(BoostIterRecord {
            t,
            density: d,
            weak_error,
            check,
            consumed_after: source.consumed(),
        });
        if stop {
            let vote = MajorityVote::new(hypotheses);
            let final_error = exact_error(|x| vote.predict(p.domain, x), p.dist, p.target);
            let trace = BoostTrace {
                iterations,
                wl_calls: vote.len(),
                consumed: source.consumed(),
                iteration_cap: plan.t_cap,
                weak_rho: plan.weak_rho,
                final_error,
            };
            return Ok((vote, trace));
        }
    }
    Err(Error::IterationCapExceeded { cap: plan.t_cap })
}
