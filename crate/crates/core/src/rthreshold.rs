//! Replicable threshold check.
//!
//! Decides whether `E[phi(X)]` exceeds a threshold `z` by comparing the
//! sample mean against a cutoff drawn uniformly from `[3z/4, 3z/2]` on the
//! shared tape. Paired runs share the cutoff, so they disagree only when
//! their sample means straddle it.

use alloc::format;

use crate::error::Error;
use crate::math;
use crate::tape::TapeStream;

/// Parameters of one threshold check.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ThresholdParams {
    /// Threshold, in (0,1).
    pub z: f64,
    /// Replicability, in (0,1).
    pub rho: f64,
    /// Failure probability, in (0, rho/8].
    pub delta: f64,
}

impl ThresholdParams {
    pub fn new(z: f64, rho: f64, delta: f64) -> Result<Self, Error> {
        let p = ThresholdParams { z, rho, delta };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !(self.z > 0.0 && self.z < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "z = {} must lie in (0,1)",
                self.z
            )));
        }
        if !(self.rho > 0.0 && self.rho < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "rho = {} must lie in (0,1)",
                self.rho
            )));
        }
        if !(self.delta > 0.0 && self.delta <= self.rho / 8.0) {
            return Err(Error::InvalidParameter(format!(
                "delta = {} must lie in (0, rho/8] = (0, {}]",
                self.delta,
                self.rho / 8.0
            )));
        }
        Ok(())
    }
}

/// Required sample size `ceil(scale * c * ln(1/delta) / (z * rho^2))`.
///
/// Natural log: the underlying concentration bounds are e-base. `c` is the
/// explicit constant (700 by default in [`crate::BoostConfig`]). This is
/// pure arithmetic on the bound; range validation of `(z, rho, delta)` as a
/// check configuration lives in [`ThresholdParams`].
pub fn threshold_sample_size(
    z: f64,
    rho: f64,
    delta: f64,
    c: f64,
    scale: f64,
) -> Result<usize, Error> {
    if !(z > 0.0 && rho > 0.0 && delta > 0.0 && delta <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "threshold size needs z, rho > 0 and delta in (0,1]; got z={z}, rho={rho}, delta={delta}"
        )));
    }
    if !(scale > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "scale = {scale} must be positive"
        )));
    }
    let m = scale * c * math::ln(1.0 / delta) / (z * rho * rho);
    Ok(math::ceil_count(m))
}

/// The bit together with the evidence that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ThresholdOutcome {
    pub bit: bool,
    pub phi_mean: f64,
    pub cutoff: f64,
}

/// Runs the check on `items`, drawing the cutoff from `stream`.
///
/// `required` is the minimum sample size the caller computed for its
/// `(rho, delta)` allocation; fewer items is an `InsufficientSamples` error.
pub fn rthreshold<F>(
    items: &[usize],
    p: &ThresholdParams,
    phi: F,
    stream: &mut TapeStream,
    required: usize,
) -> Result<ThresholdOutcome, Error>
where
    F: Fn(usize) -> f64,
{
    p.validate()?;
    if items.len() < required {
        return Err(Error::InsufficientSamples {
            needed: required,
            available: items.len(),
        });
    }
    let cutoff = stream.uniform(0.75 * p.z, 1.5 * p.z);
    let sum: f64 = items.iter().map(|&x| phi(x)).sum();
    let phi_mean = sum / items.len() as f64;
    Ok(ThresholdOutcome {
        bit: phi_mean > cutoff,
        phi_mean,
        cutoff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tape::RandomTape;

    fn stream(seed: u64) -> TapeStream {
        RandomTape::new(seed).child("thresh", 0).stream()
    }

    #[test]
    fn sample_size_plugin_values() {
        // 700 * ln(20) / (0.1 * 0.25) = 83880.50..., so the ceiling is 83881.
        assert_eq!(
            threshold_sample_size(0.1, 0.5, 0.05, 700.0, 1.0).unwrap(),
            83_881
        );
        // ln(1/delta) = 1 plug-in.
        let e_inv = (1.0f64).exp().recip();
        assert_eq!(threshold_sample_size(1.0, 1.0, e_inv, 700.0, 1.0).unwrap(), 700);
    }

    #[test]
    fn degenerate_scale_is_rejected() {
        assert!(threshold_sample_size(0.1, 0.5, 0.05, 700.0, 0.0).is_err());
    }

    #[test]
    fn delta_above_rho_over_eight_is_rejected() {
        assert!(ThresholdParams::new(0.1, 0.5, 0.1).is_err());
    }

    #[test]
    fn zero_function_always_returns_zero_bit() {
        let p = ThresholdParams::new(0.3, 0.5, 0.05).unwrap();
        let items: alloc::vec::Vec<usize> = (0..100).collect();
        for seed in 0..50 {
            let out = rthreshold(&items, &p, |_| 0.0, &mut stream(seed), 0).unwrap();
            assert!(!out.bit);
        }
    }

    #[test]
    fn constant_one_function_always_returns_one_bit() {
        let p = ThresholdParams::new(0.25, 0.5, 0.05).unwrap();
        let items: alloc::vec::Vec<usize> = (0..100).collect();
        for seed in 0..50 {
            let out = rthreshold(&items, &p, |_| 1.0, &mut stream(seed), 0).unwrap();
            assert!(out.bit, "mean 1 must beat any cutoff <= 3/8");
        }
    }

    #[test]
    fn cutoff_lies_in_stated_range() {
        let p = ThresholdParams::new(0.1, 0.5, 0.05).unwrap();
        let items: alloc::vec::Vec<usize> = (0..10).collect();
        for seed in 0..500 {
            let out = rthreshold(&items, &p, |_| 0.5, &mut stream(seed), 0).unwrap();
            assert!(out.cutoff >= 0.75 * p.z && out.cutoff <= 1.5 * p.z);
        }
    }

    #[test]
    fn fixed_tape_and_sample_is_deterministic() {
        let p = ThresholdParams::new(0.1, 0.5, 0.05).unwrap();
        let items: alloc::vec::Vec<usize> = (0..64).collect();
        let phi = |x: usize| (x % 7) as f64 / 7.0;
        let a = rthreshold(&items, &p, phi, &mut stream(9), 0).unwrap();
        let b = rthreshold(&items, &p, phi, &mut stream(9), 0).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn undersized_sample_is_an_error() {
        let p = ThresholdParams::new(0.1, 0.5, 0.05).unwrap();
        let items: alloc::vec::Vec<usize> = (0..10).collect();
        let err = rthreshold(&items, &p, |_| 0.0, &mut stream(0), 11).unwrap_err();
        assert_eq!(
            err,
            Error::InsufficientSamples {
                needed: 11,
                available: 10
            }
        );
    }

    #[test]
    fn raising_phi_cannot_flip_one_to_zero() {
        // Monotonicity under a shared cutoff.
        let p = ThresholdParams::new(0.2, 0.5, 0.05).unwrap();
        let items: alloc::vec::Vec<usize> = (0..64).collect();
        for seed in 0..100 {
            let low = rthreshold(&items, &p, |x| (x % 5) as f64 / 10.0, &mut stream(seed), 0)
                .unwrap();
            let high = rthreshold(
                &items,
                &p,
                |x| (x % 5) as f64 / 10.0 + 0.05,
                &mut stream(seed),
                0,
            )
            .unwrap();
            assert!(!(low.bit && !high.bit));
        }
    }
}
