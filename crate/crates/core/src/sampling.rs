//! Rejection sampling from reweighted distributions.
//!
//! The canonical accept/reject scan: candidates from the base source are
//! taken in order, one uniform coin per candidate, accepted iff the coin is
//! at most `mu(x)`. Coins come from a dedicated derived stream, so the
//! data-dependent number of coins consumed can never desynchronize any other
//! stream between paired runs.

use alloc::format;
use alloc::vec::Vec;

use crate::domain::SampleSource;
use crate::error::Error;
use crate::math;
use crate::tape::TapeStream;

/// Input size `ceil(scale * factor * ln(1/delta) * m_target / eps)`,
/// clamped to at least `m_target` (fewer inputs than targets can never
/// succeed; `delta = 1` would otherwise give 0).
pub fn rejection_input_size(
    m_target: usize,
    eps: f64,
    delta: f64,
    factor: f64,
    scale: f64,
) -> Result<usize, Error> {
    if m_target == 0 {
        return Err(Error::InvalidParameter("m_target must be >= 1".into()));
    }
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "eps = {eps} must lie in (0,1]"
        )));
    }
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "delta = {delta} must lie in (0,1]"
        )));
    }
    if !(scale > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "scale = {scale} must be positive"
        )));
    }
    let m = scale * factor * math::ln(1.0 / delta) * m_target as f64 / eps;
    Ok(math::ceil_count(m).max(m_target))
}

/// Scans `source` in order, accepting each candidate `x` iff one fresh coin
/// `u` satisfies `u <= mu(x)`, until `m_target` points are accepted.
///
/// Exhausting the source first is the failure event and maps to
/// `SamplesExhausted`.
pub fn rejection_sample<M>(
    source: &mut dyn SampleSource,
    m_target: usize,
    mu: M,
    coins: &mut TapeStream,
) -> Result<Vec<usize>, Error>
where
    M: Fn(usize) -> f64,
{
    let mut accepted = Vec::with_capacity(m_target);
    while accepted.len() < m_target {
        let x = match source.fresh_one() {
            Ok(x) => x,
            Err(Error::InsufficientSamples { .. }) => {
                return Err(Error::SamplesExhausted {
                    requested: m_target,
                    accepted: accepted.len(),
                })
            }
            Err(e) => return Err(e),
        };
        if coins.next_f64() <= mu(x) {
            accepted.push(x);
        }
    }
    Ok(accepted)
}

/// A lazy view of `D_mu`: draws from the wrapped source and filters by the
/// accept/reject rule, with its own coin stream.
pub struct RejectionSource<'a, M> {
    inner: &'a mut dyn SampleSource,
    mu: M,
    coins: TapeStream,
    accepted: usize,
}

impl<'a, M: Fn(usize) -> f64> RejectionSource<'a, M> {
    pub fn new(inner: &'a mut dyn SampleSource, mu: M, coins: TapeStream) -> Self {
        RejectionSource {
            inner,
            mu,
            coins,
            accepted: 0,
        }
    }
}

impl<'a, M: Fn(usize) -> f64> SampleSource for RejectionSource<'a, M> {
    fn fresh_one(&mut self) -> Result<usize, Error> {
        loop {
            let x = self.inner.fresh_one()?;
            if self.coins.next_f64() <= (self.mu)(x) {
                self.accepted += 1;
                return Ok(x);
            }
        }
    }

    fn consumed(&self) -> usize {
        self.accepted
    }
}
