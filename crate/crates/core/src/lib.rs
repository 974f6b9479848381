//! Replicable boosting primitives over explicit finite domains.
//!
//! The crate provides the building blocks for boosting algorithms whose
//! outputs are reproducible across runs that share a published random seed:
//!
//! * [`tape`] — hierarchical, seed-derived randomness streams shared between
//!   paired runs,
//! * [`rthreshold`] — a replicable threshold check with a randomly placed
//!   cutoff,
//! * [`sampling`] — rejection sampling from reweighted distributions,
//! * [`weak`] — decision-stump weak learners (an exact-oracle variant and a
//!   sample-based replicable variant),
//! * [`rboost`] — the smooth booster with periodic threshold termination,
//! * [`rmeta`] — the two-layer meta booster with capped misclassification
//!   counts.
//!
//! Everything here is pure computation over `alloc`; IO, file formats and the
//! verification harness live in the companion `repliboost` crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod config;
pub mod domain;
pub mod error;
pub mod hypothesis;
pub mod math;
pub mod measure;
pub mod rboost;
pub mod rmeta;
pub mod rthreshold;
pub mod sampling;
pub mod tape;
pub mod weak;

pub use config::BoostConfig;
pub use domain::{Domain, DomainPoint, FiniteDistribution, Sample, SampleSource, TargetFunction};
pub use error::Error;
pub use hypothesis::{Committee, Hypothesis, MajorityVote};
pub use tape::{RandomTape, TapeStream};
