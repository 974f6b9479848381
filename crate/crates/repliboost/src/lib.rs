//! Std companion to `repliboost-core`: Monte Carlo verification harness,
//! synthetic domain generation, file formats, and experiment orchestration.

pub mod experiment;
pub mod gen;
pub mod harness;
pub mod io;

pub use repliboost_core as core;
