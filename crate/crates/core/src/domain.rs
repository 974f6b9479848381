//! Finite labeled domains, explicit distributions and sample pools.

use alloc::format;
use alloc::vec::Vec;

use crate::error::Error;
use crate::tape::TapeStream;

/// A point of the finite input domain. Ids are dense `0..n-1`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DomainPoint {
    pub id: usize,
    pub features: Vec<f64>,
}

/// An explicit finite domain with a constant feature dimension.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Domain {
    points: Vec<DomainPoint>,
    dim: usize,
}

impl Domain {
    pub fn new(features: Vec<Vec<f64>>) -> Result<Self, Error> {
        if features.is_empty() {
            return Err(Error::InvalidParameter("domain must be nonempty".into()));
        }
        let dim = features[0].len();
        if features.iter().any(|f| f.len() != dim) {
            return Err(Error::InvalidParameter(
                "feature dimension must be constant across the domain".into(),
            ));
        }
        let points = features
            .into_iter()
            .enumerate()
            .map(|(id, features)| DomainPoint { id, features })
            .collect();
        Ok(Domain { points, dim })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, id: usize) -> &DomainPoint {
        &self.points[id]
    }

    pub fn feature(&self, id: usize, j: usize) -> f64 {
        self.points[id].features[j]
    }

    pub fn points(&self) -> &[DomainPoint] {
        &self.points
    }
}

/// Labels in `{-1,+1}`, total on the domain and immutable for a run.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TargetFunction {
    labels: Vec<i8>,
}

impl TargetFunction {
    pub fn new(labels: Vec<i8>) -> Result<Self, Error> {
        if labels.iter().any(|&l| l != 1 && l != -1) {
            return Err(Error::InvalidParameter(
                "labels must be -1 or +1".into(),
            ));
        }
        Ok(TargetFunction { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, id: usize) -> i8 {
        self.labels[id]
    }
}

/// Tolerance for the unit-sum check on probability vectors.
pub const PROB_SUM_TOL: f64 = 1e-12;

/// An explicit probability vector over the domain.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FiniteDistribution {
    probs: Vec<f64>,
}

impl FiniteDistribution {
    pub fn new(probs: Vec<f64>) -> Result<Self, Error> {
        if probs.is_empty() {
            return Err(Error::InvalidParameter(
                "distribution must be nonempty".into(),
            ));
        }
        if probs.iter().any(|&p| !(p >= 0.0) || !p.is_finite()) {
            return Err(Error::InvalidParameter(
                "probabilities must be finite and nonnegative".into(),
            ));
        }
        let sum: f64 = probs.iter().sum();
        if crate::math::abs(sum - 1.0) > PROB_SUM_TOL {
            return Err(Error::InvalidParameter(format!(
                "probabilities sum to {sum}, expected 1"
            )));
        }
        Ok(FiniteDistribution { probs })
    }

    /// Builds a distribution from nonnegative weights, normalizing exactly.
    pub fn from_weights(weights: &[f64]) -> Result<Self, Error> {
        let total: f64 = weights.iter().sum();
        if !(total > 0.0) {
            return Err(Error::ZeroDensity);
        }
        FiniteDistribution::new(weights.iter().map(|w| w / total).collect())
    }

    pub fn uniform(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "distribution must be nonempty".into(),
            ));
        }
        Ok(FiniteDistribution {
            probs: alloc::vec![1.0 / n as f64; n],
        })
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn prob(&self, id: usize) -> f64 {
        self.probs[id]
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Cumulative sums for inverse-CDF draws. The last entry is forced to 1
    /// so a uniform draw can never fall past the end.
    pub fn cumulative(&self) -> Vec<f64> {
        let mut acc = 0.0;
        let mut cum: Vec<f64> = self
            .probs
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect();
        if let Some(last) = cum.last_mut() {
            *last = 1.0;
        }
        cum
    }
}

/// A source of fresh i.i.d. draws (domain ids). Successive requests consume
/// disjoint, strictly increasing ranges of the underlying pool.
pub trait SampleSource {
    fn fresh_one(&mut self) -> Result<usize, Error>;

    fn fresh(&mut self, n: usize) -> Result<Vec<usize>, Error> {
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            out.push(self.fresh_one()?);
        }
        Ok(out)
    }

    /// Total items handed out so far.
    fn consumed(&self) -> usize;
}

/// A finite, pre-drawn sample with a consumed-prefix cursor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    items: Vec<usize>,
    cursor: usize,
}

impl Sample {
    pub fn new(items: Vec<usize>) -> Self {
        Sample { items, cursor: 0 }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn remaining(&self) -> usize {
        self.items.len() - self.cursor
    }

    pub fn items(&self) -> &[usize] {
        &self.items
    }
}

impl SampleSource for Sample {
    fn fresh_one(&mut self) -> Result<usize, Error> {
        if self.cursor >= self.items.len() {
            return Err(Error::InsufficientSamples {
                needed: self.cursor + 1,
                available: self.items.len(),
            });
        }
        let id = self.items[self.cursor];
        self.cursor += 1;
        Ok(id)
    }

    fn fresh(&mut self, n: usize) -> Result<Vec<usize>, Error> {
        if self.remaining() < n {
            return Err(Error::InsufficientSamples {
                needed: self.cursor + n,
                available: self.items.len(),
            });
        }
        let out = self.items[self.cursor..self.cursor + n].to_vec();
        self.cursor += n;
        Ok(out)
    }

    fn consumed(&self) -> usize {
        self.cursor
    }
}

/// A lazy i.i.d. source drawing from a `FiniteDistribution` via inverse CDF.
/// Never exhausts; its stream is data randomness, distinct from the shared
/// tape.
pub struct DistSource {
    cum: Vec<f64>,
    stream: TapeStream,
    consumed: usize,
}

impl DistSource {
    pub fn new(dist: &FiniteDistribution, stream: TapeStream) -> Self {
        DistSource {
            cum: dist.cumulative(),
            stream,
            consumed: 0,
        }
    }
}

impl SampleSource for DistSource {
    fn fresh_one(&mut self) -> Result<usize, Error> {
        let u = self.stream.next_f64();
        let id = match self.cum.binary_search_by(|c| c.partial_cmp(&u).unwrap()) {
            Ok(i) => i + 1,
            Err(i) => i,
        };
        self.consumed += 1;
        Ok(id.min(self.cum.len() - 1))
    }

    fn consumed(&self) -> usize {
        self.consumed
    }
}
