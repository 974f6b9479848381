//! Shared configuration for the boosting stack.

use alloc::format;

use crate::error::Error;

/// Parameters and explicit constants for a boosting run.
///
/// `budget_scale` multiplies every sample-size formula so desk-scale runs
/// stay honest about which constant they used; the default 1 keeps the
/// theoretical constants. The `floor_*` knobs put a lower bound on the
/// individual subroutine sizes after scaling, because a single global scale
/// preserves the (enormous) relative magnitudes of the formulas.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoostConfig {
    /// Replicability budget, in (0,1).
    pub rho: f64,
    /// Target error, in (0,1).
    pub eps: f64,
    /// Weak-learner advantage, in (0,1/2).
    pub gamma: f64,
    /// Inner error of the meta booster; 1/16 unless explicitly overridden.
    pub eps0: f64,
    /// Explicit constant of the threshold-check sample bound.
    pub c_threshold: f64,
    /// Explicit constant of the rejection-sampler input bound.
    pub rejection_factor: f64,
    /// Iteration-cap constant: the smooth booster runs at most
    /// `ceil(c_iter / (eps * gamma^2))` rounds.
    pub c_iter: f64,
    /// Positive multiplier on all sample-size formulas.
    pub budget_scale: f64,
    /// Lower bound on weak-learner sample sizes after scaling.
    pub floor_weak: usize,
    /// Lower bound on threshold-check sample sizes after scaling.
    pub floor_threshold: usize,
    /// Lower bound on rejection-sampler input sizes after scaling.
    pub floor_rejection: usize,
}

impl BoostConfig {
    pub fn new(rho: f64, eps: f64, gamma: f64) -> Result<Self, Error> {
        let cfg = BoostConfig {
            rho,
            eps,
            gamma,
            eps0: 1.0 / 16.0,
            c_threshold: 700.0,
            rejection_factor: 8.0,
            c_iter: 16.0,
            budget_scale: 1.0,
            floor_weak: 0,
            floor_threshold: 0,
            floor_rejection: 0,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_budget_scale(mut self, scale: f64) -> Self {
        self.budget_scale = scale;
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        fn open_unit(name: &str, v: f64) -> Result<(), Error> {
            if !(v > 0.0 && v < 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "{name} = {v} must lie in (0,1)"
                )));
            }
            Ok(())
        }
        open_unit("rho", self.rho)?;
        open_unit("eps", self.eps)?;
        open_unit("eps0", self.eps0)?;
        if !(self.gamma > 0.0 && self.gamma < 0.5) {
            return Err(Error::InvalidParameter(format!(
                "gamma = {} must lie in (0,1/2)",
                self.gamma
            )));
        }
        if !(self.budget_scale > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "budget_scale = {} must be positive",
                self.budget_scale
            )));
        }
        if !(self.c_threshold > 0.0) || !(self.rejection_factor > 0.0) || !(self.c_iter > 0.0) {
            return Err(Error::InvalidParameter(
                "constants must be positive".into(),
            ));
        }
        Ok(())
    }
}
