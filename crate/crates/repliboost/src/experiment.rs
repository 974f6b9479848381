//! Experiment orchestration: config loading, trial execution, and the
//! published-seed output directory (reports, summary CSV, manifest).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use repliboost_core::config::BoostConfig;
use repliboost_core::domain::DistSource;
use repliboost_core::rboost::{rboost_star, LearnerKind, Mode, Problem};
use repliboost_core::rmeta::rmetaboost;
use repliboost_core::tape::RandomTape;
use repliboost_core::weak::StumpGrid;

use crate::harness::RunReport;
use crate::io::{self, Manifest};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    RboostStar,
    Rmetaboost,
}

/// Flat experiment configuration. The JSON config file uses exactly these
/// keys; CLI flags override file values.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub algorithm: Algorithm,
    pub rho: f64,
    pub eps: f64,
    pub gamma: f64,
    pub mode: Mode,
    pub learner: LearnerKind,
    #[serde(default = "default_scale")]
    pub budget_scale: f64,
    #[serde(default)]
    pub floor_weak: usize,
    #[serde(default)]
    pub floor_threshold: usize,
    #[serde(default)]
    pub floor_rejection: usize,
    #[serde(default = "default_grid")]
    pub grid_resolution: usize,
    #[serde(default = "default_trials")]
    pub trials: usize,
    pub domain: PathBuf,
    pub seed: u64,
    pub out_dir: PathBuf,
}

fn default_scale() -> f64 {
    1.0
}

fn default_grid() -> usize {
    32
}

fn default_trials() -> usize {
    1
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read config {}", path.display()))?;
        serde_json::from_str(&text)
            .with_context(|| format!("cannot parse config {}", path.display()))
    }

    pub fn boost_config(&self) -> Result<BoostConfig> {
        let mut cfg = BoostConfig::new(self.rho, self.eps, self.gamma)?;
        cfg.budget_scale = self.budget_scale;
        cfg.floor_weak = self.floor_weak;
        cfg.floor_threshold = self.floor_threshold;
        cfg.floor_rejection = self.floor_rejection;
        cfg.validate()?;
        if self.trials == 0 {
            anyhow::bail!("trials must be at least 1");
        }
        Ok(cfg)
    }
}

/// One summary row; the `agreement_key` is a digest of the canonical output
/// so identical hypotheses compare equal across runs and machines.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrialRow {
    pub trial: usize,
    pub error: Option<f64>,
    pub iterations: usize,
    pub wl_calls: usize,
    pub failed: bool,
    pub agreement_key: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentSummary {
    pub rows: Vec<TrialRow>,
    pub out_dir: PathBuf,
}

fn agreement_key<T: Serialize>(output: &T) -> String {
    let text = serde_json::to_string(output).expect("output serializes");
    let digest = Sha256::digest(text.as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

fn run_trial(cfg: &ExperimentConfig, bcfg: &BoostConfig, p: &Problem<'_>, trial: usize) -> RunReport {
    let tape = RandomTape::new(cfg.seed).child("trial", trial as u64);
    let data = RandomTape::new(cfg.seed).child("trial-data", trial as u64);
    let mut source = DistSource::new(p.dist, data.child("draws", 0).stream());
    match cfg.algorithm {
        Algorithm::RboostStar => {
            match rboost_star(p, bcfg, cfg.mode, cfg.learner, &mut source, &tape) {
                Ok((vote, trace)) => RunReport::Boost { vote, trace },
                Err(e) => RunReport::Failed { error: e.to_string() },
            }
        }
        Algorithm::Rmetaboost => {
            match rmetaboost(p, bcfg, cfg.mode, cfg.learner, &mut source, &tape) {
                Ok((committee, trace)) => RunReport::Meta { committee, trace },
                Err(e) => RunReport::Failed { error: e.to_string() },
            }
        }
    }
}

fn summary_csv(rows: &[TrialRow]) -> String {
    let mut out = String::from("trial,error,iterations,wl_calls,failed,agreement_key\n");
    for r in rows {
        let error = r.error.map(|e| e.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.trial, error, r.iterations, r.wl_calls, r.failed, r.agreement_key
        )
        .unwrap();
    }
    out
}

/// Runs all trials and writes the output directory: per-trial RunReport
/// JSONs, `summary.csv`, and a manifest recording (root seed, config hash,
/// tool version). The manifest is written before the trials with
/// `completed: false` and rewritten `true` only after every artifact landed,
/// so interrupted runs are never mistaken for complete ones.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentSummary> {
    let bcfg = cfg.boost_config()?;
    let ld = io::load_domain(&cfg.domain)?;
    if ld.dist.probs().iter().any(|&p| p <= 0.0) {
        anyhow::bail!("sampling distribution must have full support");
    }
    let grid = StumpGrid::from_domain(&ld.domain, cfg.grid_resolution);
    let p = Problem {
        domain: &ld.domain,
        dist: &ld.dist,
        target: &ld.target,
        grid: &grid,
    };

    fs::create_dir_all(&cfg.out_dir)
        .with_context(|| format!("cannot create {}", cfg.out_dir.display()))?;
    let mut manifest = Manifest {
        root_seed: cfg.seed,
        config_hash: io::config_hash(cfg),
        tool_version: io::TOOL_VERSION.into(),
        completed: false,
    };
    io::write_manifest(&cfg.out_dir, &manifest)?;

    let reports: Vec<RunReport> = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| run_trial(cfg, &bcfg, &p, trial))
        .collect();

    let mut rows = Vec::with_capacity(reports.len());
    for (trial, report) in reports.iter().enumerate() {
        io::write_json(&cfg.out_dir.join(format!("report-{trial:04}.json")), report)?;
        let key = match report {
            RunReport::Boost { vote, .. } => agreement_key(vote),
            RunReport::Meta { committee, .. } => agreement_key(committee),
            RunReport::Failed { .. } => String::from("-"),
        };
        rows.push(TrialRow {
            trial,
            error: report.final_error(),
            iterations: report.iterations(),
            wl_calls: report.wl_calls(),
            failed: report.failed(),
            agreement_key: key,
        });
    }
    fs::write(cfg.out_dir.join("summary.csv"), summary_csv(&rows))?;

    manifest.completed = true;
    io::write_manifest(&cfg.out_dir, &manifest)?;
    Ok(ExperimentSummary {
        rows,
        out_dir: cfg.out_dir.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::margin_domain;
    use crate::io::save_domain;

    fn base_config(dir: &Path) -> ExperimentConfig {
        ExperimentConfig {
            algorithm: Algorithm::RboostStar,
            rho: 0.5,
            eps: 1.0 / 16.0,
            gamma: 0.1,
            mode: Mode::Exact,
            learner: LearnerKind::Oracle,
            budget_scale: 1.0,
            floor_weak: 0,
            floor_threshold: 0,
            floor_rejection: 0,
            grid_resolution: 32,
            trials: 2,
            domain: dir.join("domain.json"),
            seed: 11,
            out_dir: dir.join("out"),
        }
    }

    #[test]
    fn experiment_writes_all_artifacts_and_completes_manifest() {
        let dir = tempfile::tempdir().unwrap();
        let ld = margin_domain(32, 0.1, 1).unwrap();
        save_domain(&dir.path().join("domain.json"), &ld).unwrap();
        let cfg = base_config(dir.path());
        let summary = run_experiment(&cfg).unwrap();
        assert_eq!(summary.rows.len(), 2);
        assert!(summary.rows.iter().all(|r| !r.failed));
        // Exact-mode trials share the trial-indexed tape but the algorithm is
        // deterministic, so both rows carry the same agreement key.
        assert_eq!(summary.rows[0].agreement_key, summary.rows[1].agreement_key);
        for t in 0..2 {
            assert!(cfg.out_dir.join(format!("report-{t:04}.json")).exists());
        }
        let manifest: Manifest = serde_json::from_str(
            &fs::read_to_string(cfg.out_dir.join("manifest.json")).unwrap(),
        )
        .unwrap();
        assert!(manifest.completed);
        assert_eq!(manifest.root_seed, 11);
        assert_eq!(manifest.config_hash, io::config_hash(&cfg));
    }

    #[test]
    fn rerun_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let ld = margin_domain(32, 0.1, 2).unwrap();
        save_domain(&dir.path().join("domain.json"), &ld).unwrap();
        let mut cfg = base_config(dir.path());
        cfg.out_dir = dir.path().join("a");
        run_experiment(&cfg).unwrap();
        let mut cfg2 = cfg.clone();
        cfg2.out_dir = dir.path().join("b");
        run_experiment(&cfg2).unwrap();
        let a = fs::read(dir.path().join("a/summary.csv")).unwrap();
        let b = fs::read(dir.path().join("b/summary.csv")).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn missing_domain_file_fails_without_outputs() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = base_config(dir.path());
        assert!(run_experiment(&cfg).is_err());
        assert!(!cfg.out_dir.join("summary.csv").exists());
    }

    #[test]
    fn config_round_trips_through_json() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = base_config(dir.path());
        let path = dir.path().join("config.json");
        crate::io::write_json(&path, &cfg).unwrap();
        let back = ExperimentConfig::load(&path).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), serde_json::to_string(&cfg).unwrap());
    }
}
