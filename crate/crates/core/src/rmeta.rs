//! The two-layer meta booster.
//!
//! Each outer round trains one inner majority vote at constant inner error,
//! counts capped misclassifications per point, reweighs by `exp(M - c)`, and
//! finally majority-votes the inner hypotheses. The cap `c_t` only grows
//! when a replicable threshold check certifies that the points at the next
//! count level carry enough mass, which keeps the reweighing dense.

use alloc::vec;
use alloc::vec::Vec;

use crate::config::BoostConfig;
use crate::domain::{Domain, SampleSource, TargetFunction};
use crate::error::Error;
use crate::hypothesis::{Committee, MajorityVote};
use crate::math;
use crate::measure::{density, exact_error, reweighted_distribution};
use crate::rboost::{
    rboost_star, BoostTrace, LearnerKind, Mode, Problem, ThresholdCheckRecord,
};
use crate::rthreshold::{rthreshold, threshold_sample_size, ThresholdParams};
use crate::sampling::RejectionSource;
use crate::tape::RandomTape;

/// Outer round count `T = ceil(8 ln(2/eps))` (natural log; the correctness
/// argument needs `exp(-T/8) <= eps/2`).
pub fn compute_t(eps: f64) -> Result<usize, Error> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidParameter(
            alloc::format!("eps = {eps} must lie in (0,1)"),
        ));
    }
    Ok(math::ceil_count(8.0 * math::ln(2.0 / eps)).max(1))
}

/// The outer-loop function description after `t` rounds: inner votes, the
/// threshold bits, and the cap history. `N`, `M` and `mu` are evaluated
/// lazily per point by replaying the update chain.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MetaState {
    /// Inner hypotheses `h_1..h_t`.
    pub votes: Vec<MajorityVote>,
    /// Threshold bits `b_2..b_{t+1}`.
    pub bits: Vec<bool>,
    /// Cap history `c_1..c_{t+1}`; starts as `[0]`.
    pub caps: Vec<usize>,
}

impl MetaState {
    pub fn new() -> Self {
        MetaState {
            votes: Vec::new(),
            bits: Vec::new(),
            caps: vec![0],
        }
    }

    pub fn rounds(&self) -> usize {
        self.votes.len()
    }

    pub fn cap(&self) -> usize {
        *self.caps.last().expect("caps is never empty")
    }

    /// `M_{t+1}(x)`: replay of `N_{s+1} = M_s + 1{h_s wrong}` and
    /// `M_{s+1} = min(N_{s+1}, c_{s+1})`.
    pub fn m_value(&self, domain: &Domain, target: &TargetFunction, x: usize) -> usize {
        let mut m = 0usize;
        for (s, h) in self.votes.iter().enumerate() {
            let wrong = (h.predict(domain, x) != target.label(x)) as usize;
            m = (m + wrong).min(self.caps[s + 1]);
        }
        m
    }

    /// `N_{t+2}(x) = M_{t+1}(x) + 1{h wrong}` for a prospective hypothesis.
    pub fn n_next(
        &self,
        domain: &Domain,
        target: &TargetFunction,
        h: &MajorityVote,
        x: usize,
    ) -> usize {
        self.m_value(domain, target, x) + (h.predict(domain, x) != target.label(x)) as usize
    }

    /// `mu(x) = exp(M(x) - c)`; the exponent is never positive, so the
    /// value lies in (0,1].
    pub fn mu(&self, domain: &Domain, target: &TargetFunction, x: usize) -> f64 {
        math::exp(self.m_value(domain, target, x) as f64 - self.cap() as f64)
    }
}

/// One counter step: appends `h_t` and the bit, advances the cap. Value
/// semantics; the old state is untouched.
pub fn meta_step_counters(state: &MetaState, h: MajorityVote, b_next: bool) -> MetaState {
    let mut next = state.clone();
    next.votes.push(h);
    next.bits.push(b_next);
    next.caps.push(state.cap() + b_next as usize);
    next
}

/// Per-outer-iteration trace entry.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MetaIterRecord {
    pub t: usize,
    /// Exact density of `mu_t`.
    pub density: f64,
    /// Exact error of the inner hypothesis under the reweighted
    /// distribution it was trained against.
    pub inner_error: f64,
    pub check: ThresholdCheckRecord,
    pub cap_before: usize,
    pub cap_after: usize,
    pub consumed_after: usize,
    pub inner: BoostTrace,
}

/// Full audit trace of one meta run.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MetaTrace {
    pub rounds: usize,
    pub inner_rho: f64,
    pub inner_eps: f64,
    pub iterations: Vec<MetaIterRecord>,
    pub wl_calls: usize,
    pub consumed: usize,
    pub final_error: f64,
    /// Final counts `M_{T+1}(x)` per point.
    pub final_m: Vec<usize>,
    pub caps: Vec<usize>,
}

/// Runs the meta booster for `T = compute_t(eps)` rounds.
pub fn rmetaboost(
    p: &Problem<'_>,
    cfg: &BoostConfig,
    mode: Mode,
    learner: LearnerKind,
    source: &mut dyn SampleSource,
    tape: &RandomTape,
) -> Result<(Committee, MetaTrace), Error> {
    cfg.validate()?;
    let rounds = compute_t(cfg.eps)?;
    let inner_rho = cfg.rho / (6.0 * rounds as f64);
    let mut inner_cfg = cfg.clone();
    inner_cfg.rho = inner_rho;
    inner_cfg.eps = cfg.eps0;

    let thresh_rho = cfg.rho / (3.0 * rounds as f64);
    let thresh_delta = cfg.rho / (24.0 * rounds as f64);
    let thresh = ThresholdParams::new(cfg.eps / 16.0, thresh_rho, thresh_delta)?;
    let thresh_required = threshold_sample_size(
        thresh.z,
        thresh.rho,
        thresh.delta,
        cfg.c_threshold,
        cfg.budget_scale,
    )?;
    let thresh_m = thresh_required.max(cfg.floor_threshold).max(1);

    let n = p.domain.len();
    let mut m_table = vec![0usize; n];
    let mut cap = 0usize;
    let mut caps = vec![0usize];
    let mut votes: Vec<MajorityVote> = Vec::new();
    let mut iterations: Vec<MetaIterRecord> = Vec::new();
    let mut wl_calls = 0usize;

    for t in 1..=rounds {
        let mu_table: Vec<f64> = m_table
            .iter()
            .map(|&m| math::exp(m as f64 - cap as f64))
            .collect();
        let mu = |x: usize| mu_table[x];
        let d = density(mu, p.dist);
        let d_mu = reweighted_distribution(mu, p.dist)
            .map_err(|e| Error::in_iteration(t, "reweigh", e))?;
        let inner_problem = Problem {
            domain: p.domain,
            dist: &d_mu,
            target: p.target,
            grid: p.grid,
        };
        let inner_tape = tape.child("meta-inner", t as u64);

        let (h, inner_trace) = match mode {
            Mode::Exact => rboost_star(
                &inner_problem,
                &inner_cfg,
                Mode::Exact,
                learner,
                source,
                &inner_tape,
            ),
            Mode::Sampled => {
                let coins = tape.child("meta-reject", t as u64).stream();
                let mut reweighted_source = RejectionSource::new(source, mu, coins);
                rboost_star(
                    &inner_problem,
                    &inner_cfg,
                    Mode::Sampled,
                    learner,
                    &mut reweighted_source,
                    &inner_tape,
                )
            }
        }
        .map_err(|e| Error::in_iteration(t, "inner", e))?;
        wl_calls += inner_trace.wl_calls;
        let inner_error = exact_error(|x| h.predict(p.domain, x), &d_mu, p.target);

        let n_table: Vec<usize> = (0..n)
            .map(|x| m_table[x] + (h.predict(p.domain, x) != p.target.label(x)) as usize)
            .collect();
        let phi = |x: usize| (n_table[x] == cap + 1) as u8 as f64;
        let exact_phi = density(phi, p.dist);

        let check = match mode {
            Mode::Exact => ThresholdCheckRecord {
                z: thresh.z,
                bit: exact_phi > thresh.z,
                phi_mean: exact_phi,
                cutoff: None,
                exact_mean: exact_phi,
            },
            Mode::Sampled => {
                let items = source
                    .fresh(thresh_m)
                    .map_err(|e| Error::in_iteration(t, "sample", e))?;
                let out = rthreshold(
                    &items,
                    &thresh,
                    phi,
                    &mut tape.child("meta-thresh", t as u64).stream(),
                    thresh_required.min(thresh_m),
                )
                .map_err(|e| Error::in_iteration(t, "thresh", e))?;
                ThresholdCheckRecord {
                    z: thresh.z,
                    bit: out.bit,
                    phi_mean: out.phi_mean,
                    cutoff: Some(out.cutoff),
                    exact_mean: exact_phi,
                }
            }
        };

        let cap_before = cap;
        cap += check.bit as usize;
        caps.push(cap);
        for x in 0..n {
            m_table[x] = n_table[x].min(cap);
        }
        votes.push(h);
        iterations.push(MetaIterRecord {
            t,
            density: d,
            inner_error,
            check,
            cap_before,
            cap_after: cap,
            consumed_after: source.consumed(),
            inner: inner_trace,
        });
    }

    let committee = Committee::new(votes);
    let final_error = exact_error(|x| committee.predict(p.domain, x), p.dist, p.target);
    let trace = MetaTrace {
        rounds,
        inner_rho,
        inner_eps: cfg.eps0,
        iterations,
        wl_calls,
        consumed: source.consumed(),
        final_error,
        final_m: m_table,
        caps,
    };
    Ok((committee, trace))
}
