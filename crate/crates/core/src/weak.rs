//! Decision-stump weak learners.
//!
//! Two implementations of the abstract weak-learner contract: an
//! exact-oracle learner (deterministic, hence trivially replicable — used to
//! isolate boosting-layer behavior) and a sample-based learner whose
//! selection is stabilized by rounding empirical errors to a randomly offset
//! grid drawn from the shared tape.

use alloc::vec::Vec;

use crate::domain::{Domain, FiniteDistribution, TargetFunction};
use crate::error::Error;
use crate::hypothesis::Hypothesis;
use crate::math;
use crate::measure::exact_error;
use crate::tape::TapeStream;

/// Per-feature threshold lists derived only from the domain declaration,
/// never from samples, so hypothesis identity is replicable.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StumpGrid {
    thresholds: Vec<Vec<f64>>,
}

impl StumpGrid {
    /// Evenly spaced thresholds strictly inside each declared feature range.
    pub fn from_domain(domain: &Domain, resolution: usize) -> Self {
        let resolution = resolution.max(1);
        let thresholds = (0..domain.dim())
            .map(|j| {
                let mut lo = f64::INFINITY;
                let mut hi = f64::NEG_INFINITY;
                for p in domain.points() {
                    let v = p.features[j];
                    if v < lo {
                        lo = v;
                    }
                    if v > hi {
                        hi = v;
                    }
                }
                if hi <= lo {
                    return alloc::vec![lo];
                }
                (1..=resolution)
                    .map(|k| lo + (hi - lo) * k as f64 / (resolution + 1) as f64)
                    .collect()
            })
            .collect();
        StumpGrid { thresholds }
    }

    pub fn thresholds(&self, feature: usize) -> &[f64] {
        &self.thresholds[feature]
    }

    /// All candidate hypotheses in canonical lexicographic order:
    /// stumps by (feature, threshold, polarity +1 then -1), then the two
    /// constants.
    pub fn candidates(&self) -> Vec<Hypothesis> {
        let mut out = Vec::new();
        for (feature, ts) in self.thresholds.iter().enumerate() {
            for &threshold in ts {
                for polarity in [1i8, -1] {
                    out.push(Hypothesis::Stump {
                        feature,
                        threshold,
                        polarity,
                    });
                }
            }
        }
        out.push(Hypothesis::Constant { sign: 1 });
        out.push(Hypothesis::Constant { sign: -1 });
        out
    }

    pub fn len(&self) -> usize {
        self.thresholds.iter().map(|t| 2 * t.len()).sum::<usize>() + 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Sample complexity of the replicable stump learner:
/// `ceil(scale * 32 * ln(2 * n_candidates / rho) / w^2)` with rounding
/// width `w = gamma / 4` (Hoeffding over the candidate set; all empirical
/// errors land within `w/2` of truth with probability `1 - rho/2`, making
/// the rounded argmin stable).
pub fn weak_sample_size(
    rho: f64,
    gamma: f64,
    n_candidates: usize,
    scale: f64,
) -> Result<usize, Error> {
    if !(rho > 0.0 && rho < 1.0) || !(gamma > 0.0 && gamma < 0.5) {
        return Err(Error::InvalidParameter(
            "weak_sample_size needs rho in (0,1), gamma in (0,1/2)".into(),
        ));
    }
    if !(scale > 0.0) {
        return Err(Error::InvalidParameter("scale must be positive".into()));
    }
    let w = gamma / 4.0;
    let m = scale * 32.0 * math::ln(2.0 * n_candidates as f64 / rho) / (w * w);
    Ok(math::ceil_count(m).max(1))
}

/// Exact-oracle learner: the lexicographically-first candidate minimizing
/// exact error under `d_mu`. Deterministic, so 0-replicable.
pub fn oracle_stump_learner(
    d_mu: &FiniteDistribution,
    target: &TargetFunction,
    domain: &Domain,
    grid: &StumpGrid,
    gamma: f64,
) -> Result<Hypothesis, Error> {
    let mut best: Option<(f64, Hypothesis)> = None;
    for h in grid.candidates() {
        let err = exact_error(|x| h.predict(domain, x), d_mu, target);
        match &best {
            Some((b, _)) if *b <= err => {}
            _ => best = Some((err, h)),
        }
    }
    let (err, h) = best.expect("grid is never empty");
    if err > 0.5 - gamma {
        return Err(Error::NoWeakHypothesis {
            best_error: err,
            required: 0.5 - gamma,
        });
    }
    Ok(h)
}

/// Sample-based replicable learner.
///
/// Empirical errors of every candidate are rounded to the grid
/// `{alpha*w + k*w}` for one shared offset `alpha` drawn from the tape;
/// the lexicographically-first candidate attaining the minimum rounded
/// error wins.
pub fn replicable_stump_learner(
    items: &[usize],
    domain: &Domain,
    target: &TargetFunction,
    gamma: f64,
    rho: f64,
    grid: &StumpGrid,
    stream: &mut TapeStream,
    scale: f64,
    required: usize,
) -> Result<Hypothesis, Error> {
    let _ = (rho, scale);
    if items.len() < required {
        return Err(Error::InsufficientSamples {
            needed: required,
            available: items.len(),
        });
    }
    let alpha = stream.next_f64();
    let w = gamma / 4.0;
    let m = items.len() as f64;
    let mut best: Option<(i64, usize, f64)> = None; // (bucket, candidate index, raw error)
    for (idx, h) in grid.candidates().into_iter().enumerate() {
        let wrong = items
            .iter()
            .filter(|&&x| h.predict(domain, x) != target.label(x))
            .count();
        let err = wrong as f64 / m;
        let bucket = math::floor(err / w - alpha) as i64;
        match &best {
            Some((b, _, _)) if *b <= bucket => {}
            _ => best = Some((bucket, idx, err)),
        }
    }
    let (_, idx, err) = best.expect("grid is never empty");
    if err > 0.5 - gamma / 2.0 {
        return Err(Error::NoWeakHypothesis {
            best_error: err,
            required: 0.5 - gamma / 2.0,
        });
    }
    Ok(grid.candidates().swap_remove(idx))
}
