//! Synthetic labeled-domain generators.

use repliboost_core::domain::{Domain, FiniteDistribution, TargetFunction};
use repliboost_core::error::Error;
use repliboost_core::tape::RandomTape;

/// A domain together with its sampling distribution and target labels.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDomain {
    pub domain: Domain,
    pub dist: FiniteDistribution,
    pub target: TargetFunction,
}

/// A one-dimensional margin domain: points fill `[0, 1]` except for a gap of
/// width `margin` centered at 1/2; labels are the sign of `x - 1/2`. Points
/// are stratified (one per cell, jittered from the seed) so the two bands are
/// always covered, and the sampling distribution is uniform.
pub fn margin_domain(size: usize, margin: f64, seed: u64) -> Result<LabeledDomain, Error> {
    if size < 2 {
        return Err(Error::InvalidParameter("size must be at least 2".into()));
    }
    if !(margin > 0.0 && margin < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "margin = {margin} must lie in (0,1)"
        )));
    }
    let mut stream = RandomTape::new(seed).child("gen-margin", 0).stream();
    let n_low = size / 2;
    let n_high = size - n_low;
    let half_gap = margin / 2.0;
    let mut features = Vec::with_capacity(size);
    let mut labels = Vec::with_capacity(size);
    let mut band = |lo: f64, hi: f64, n: usize, label: i8| {
        let width = hi - lo;
        for i in 0..n {
            let u = stream.next_f64();
            features.push(vec![lo + width * (i as f64 + u) / n as f64]);
            labels.push(label);
        }
    };
    band(0.0, 0.5 - half_gap, n_low, -1);
    band(0.5 + half_gap, 1.0, n_high, 1);
    Ok(LabeledDomain {
        domain: Domain::new(features)?,
        dist: FiniteDistribution::uniform(size)?,
        target: TargetFunction::new(labels)?,
    })
}

/// A fixed 8-point domain with two well-separated clusters and every wrong
/// stump paying at least 1/8 mass; useful for end-to-end smoke tests where
/// selection noise must stay negligible.
pub fn clustered_domain() -> LabeledDomain {
    let xs = [0.1, 0.15, 0.2, 0.25, 0.75, 0.8, 0.85, 0.9];
    let features = xs.iter().map(|&x| vec![x]).collect();
    let labels = xs.iter().map(|&x| if x >= 0.5 { 1 } else { -1 }).collect();
    LabeledDomain {
        domain: Domain::new(features).unwrap(),
        dist: FiniteDistribution::uniform(8).unwrap(),
        target: TargetFunction::new(labels).unwrap(),
    }
}
