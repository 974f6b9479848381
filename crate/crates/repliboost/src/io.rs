//! File formats: domain/distribution JSON, dataset CSV, report JSON, and the
//! output-directory manifest.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use repliboost_core::domain::{Domain, FiniteDistribution, TargetFunction};

use crate::gen::LabeledDomain;

/// On-disk domain file: point features, sampling probabilities, labels.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DomainFile {
    pub points: Vec<Vec<f64>>,
    pub probs: Vec<f64>,
    pub labels: Vec<i8>,
}

impl DomainFile {
    pub fn from_labeled(ld: &LabeledDomain) -> Self {
        DomainFile {
            points: ld.domain.points().iter().map(|p| p.features.clone()).collect(),
            probs: ld.dist.probs().to_vec(),
            labels: (0..ld.target.len()).map(|x| ld.target.label(x)).collect(),
        }
    }

    pub fn into_labeled(self) -> Result<LabeledDomain> {
        if self.points.len() != self.probs.len() || self.points.len() != self.labels.len() {
            bail!(
                "domain file field lengths differ: {} points, {} probs, {} labels",
                self.points.len(),
                self.probs.len(),
                self.labels.len()
            );
        }
        Ok(LabeledDomain {
            domain: Domain::new(self.points).map_err(anyhow::Error::msg)?,
            dist: FiniteDistribution::new(self.probs).map_err(anyhow::Error::msg)?,
            target: TargetFunction::new(self.labels).map_err(anyhow::Error::msg)?,
        })
    }
}

pub fn load_domain(path: &Path) -> Result<LabeledDomain> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read domain file {}", path.display()))?;
    let file: DomainFile = serde_json::from_str(&text)
        .with_context(|| format!("cannot parse domain file {}", path.display()))?;
    file.into_labeled()
}

pub fn save_domain(path: &Path, ld: &LabeledDomain) -> Result<()> {
    write_json(path, &DomainFile::from_labeled(ld))
}

/// Dataset CSV: one row per example, feature columns then a label in
/// `{-1,+1}`. Returns feature rows and labels.
pub fn read_dataset(path: &Path) -> Result<(Vec<Vec<f64>>, Vec<i8>)> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read dataset {}", path.display()))?;
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() < 2 {
            bail!("line {}: need at least one feature and a label", lineno + 1);
        }
        let (feat, label) = fields.split_at(fields.len() - 1);
        let feats: Vec<f64> = feat
            .iter()
            .map(|f| f.parse::<f64>().with_context(|| format!("line {}: bad feature {f}", lineno + 1)))
            .collect::<Result<_>>()?;
        let l: i8 = label[0]
            .parse()
            .with_context(|| format!("line {}: bad label {}", lineno + 1, label[0]))?;
        if l != 1 && l != -1 {
            bail!("line {}: label {l} must be -1 or +1", lineno + 1);
        }
        rows.push(feats);
        labels.push(l);
    }
    if rows.is_empty() {
        bail!("dataset {} is empty", path.display());
    }
    Ok((rows, labels))
}

/// Maps dataset rows to domain point ids by exact feature equality.
pub fn dataset_ids(domain: &Domain, rows: &[Vec<f64>]) -> Result<Vec<usize>> {
    rows.iter()
        .map(|row| {
            domain
                .points()
                .iter()
                .find(|p| p.features == *row)
                .map(|p| p.id)
                .with_context(|| format!("row {row:?} matches no domain point"))
        })
        .collect()
}

/// Serializes any value as pretty JSON at `path`.
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, text + "\n")
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

/// Reproduction record for an output directory: written with
/// `completed: false` before any run starts and rewritten `true` at the end,
/// so partial outputs are never left unmarked.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Manifest {
    pub root_seed: u64,
    pub config_hash: String,
    pub tool_version: String,
    pub completed: bool,
}

pub fn config_hash<T: Serialize>(config: &T) -> String {
    let text = serde_json::to_string(config).expect("config serializes");
    let digest = Sha256::digest(text.as_bytes());
    hex(&digest)
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn write_manifest(dir: &Path, manifest: &Manifest) -> Result<()> {
    write_json(&dir.join("manifest.json"), manifest)
}

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::margin_domain;

    #[test]
    fn domain_file_round_trips() {
        let ld = margin_domain(16, 0.1, 3).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("domain.json");
        save_domain(&path, &ld).unwrap();
        let back = load_domain(&path).unwrap();
        assert_eq!(back, ld);
    }

    #[test]
    fn mismatched_lengths_are_rejected() {
        let file = DomainFile {
            points: vec![vec![0.0], vec![1.0]],
            probs: vec![1.0],
            labels: vec![1, -1],
        };
        assert!(file.into_labeled().is_err());
    }

    #[test]
    fn dataset_csv_parses_and_maps() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("data.csv");
        std::fs::write(&path, "0.25,-1\n0.75,1\n0.25,-1\n").unwrap();
        let (rows, labels) = read_dataset(&path).unwrap();
        assert_eq!(labels, vec![-1, 1, -1]);
        let domain = Domain::new(vec![vec![0.25], vec![0.75]]).unwrap();
        assert_eq!(dataset_ids(&domain, &rows).unwrap(), vec![0, 1, 0]);
    }

    #[test]
    fn bad_labels_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("data.csv");
        std::fs::write(&path, "0.25,2\n").unwrap();
        assert!(read_dataset(&path).is_err());
    }

    #[test]
    fn config_hash_is_stable_and_sensitive() {
        #[derive(Serialize)]
        struct C {
            a: u64,
        }
        assert_eq!(config_hash(&C { a: 1 }), config_hash(&C { a: 1 }));
        assert_ne!(config_hash(&C { a: 1 }), config_hash(&C { a: 2 }));
    }
}
