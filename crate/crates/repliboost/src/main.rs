//! Command-line entry point.
//!
//! Exit codes: 0 success, 1 suite failure, 2 usage/input error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use repliboost::experiment::{run_experiment, Algorithm, ExperimentConfig};
use repliboost::gen::{clustered_domain, margin_domain};
use repliboost::harness::{run_suite, Effort, SuiteVerdict, SUITES};
use repliboost::io;
use repliboost_core::rthreshold::{rthreshold, threshold_sample_size, ThresholdParams};
use repliboost_core::rboost::{LearnerKind, Mode};
use repliboost_core::tape::RandomTape;

#[derive(Parser)]
#[command(name = "repliboost", version, about = "Replicable boosting experiments")]
struct Cli {
    /// Bound on parallel trial workers.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    Exact,
    Sampled,
}

impl From<CliMode> for Mode {
    fn from(m: CliMode) -> Mode {
        match m {
            CliMode::Exact => Mode::Exact,
            CliMode::Sampled => Mode::Sampled,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CliLearner {
    Oracle,
    Stump,
}

impl From<CliLearner> for LearnerKind {
    fn from(l: CliLearner) -> LearnerKind {
        match l {
            CliLearner::Oracle => LearnerKind::Oracle,
            CliLearner::Stump => LearnerKind::Stump,
        }
    }
}

/// Flags shared by the two boosting subcommands. A config file provides
/// defaults; explicit flags override it.
#[derive(Args)]
struct BoostArgs {
    /// JSON config file with the same keys as the flags.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    rho: Option<f64>,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    domain: Option<PathBuf>,
    #[arg(long, value_enum)]
    mode: Option<CliMode>,
    #[arg(long, value_enum)]
    learner: Option<CliLearner>,
    #[arg(long)]
    budget_scale: Option<f64>,
    #[arg(long)]
    floor_weak: Option<usize>,
    #[arg(long)]
    floor_threshold: Option<usize>,
    #[arg(long)]
    floor_rejection: Option<usize>,
    #[arg(long)]
    grid_resolution: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

impl BoostArgs {
    fn into_config(self, algorithm: Algorithm) -> Result<ExperimentConfig> {
        let mut cfg = match &self.config {
            Some(path) => ExperimentConfig::load(path)?,
            None => ExperimentConfig {
                algorithm,
                rho: 0.5,
                eps: 0.1,
                gamma: 0.1,
                mode: Mode::Exact,
                learner: LearnerKind::Oracle,
                budget_scale: 1.0,
                floor_weak: 0,
                floor_threshold: 0,
                floor_rejection: 0,
                grid_resolution: 32,
                trials: 1,
                domain: PathBuf::new(),
                seed: 0,
                out_dir: PathBuf::from("out"),
            },
        };
        cfg.algorithm = algorithm;
        macro_rules! overlay {
            ($($field:ident),*) => {
                $(if let Some(v) = self.$field { cfg.$field = v; })*
            };
        }
        overlay!(
            rho,
            eps,
            gamma,
            seed,
            domain,
            budget_scale,
            floor_weak,
            floor_threshold,
            floor_rejection,
            grid_resolution,
            trials,
            out_dir
        );
        if let Some(m) = self.mode {
            cfg.mode = m.into();
        }
        if let Some(l) = self.learner {
            cfg.learner = l.into();
        }
        if cfg.domain.as_os_str().is_empty() {
            anyhow::bail!("--domain (or a config file providing it) is required");
        }
        Ok(cfg)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the replicable threshold check on synthetic Bernoulli data.
    ThresholdTest {
        #[arg(long)]
        z: f64,
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        delta: f64,
        /// True E[phi] of the synthetic Bernoulli.
        #[arg(long)]
        mean: f64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample size per trial; defaults to the required bound.
        #[arg(long)]
        m: Option<usize>,
        /// Output CSV path (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the smooth booster and emit a RunReport JSON per trial.
    RboostStar(BoostArgs),
    /// Run the meta booster and emit RunReports plus a summary CSV.
    Rmetaboost(BoostArgs),
    /// Run named verification suites.
    Verify {
        /// Suite name (threshold, rejection, rboost-star, rmetaboost,
        /// replicability) or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        pairs: Option<usize>,
        /// Directory for the verdict JSON and per-suite CSVs.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Generate a synthetic domain file.
    GenDomain {
        #[arg(long, default_value_t = 64)]
        size: usize,
        #[arg(long, default_value_t = 0.1)]
        margin: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the fixed clustered smoke-test domain instead.
        #[arg(long, default_value_t = false)]
        clustered: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

fn threshold_test(
    z: f64,
    rho: f64,
    delta: f64,
    mean: f64,
    trials: usize,
    seed: u64,
    m: Option<usize>,
    out: Option<PathBuf>,
) -> Result<()> {
    let p = ThresholdParams::new(z, rho, delta).map_err(anyhow::Error::new)?;
    if !(0.0..=1.0).contains(&mean) {
        anyhow::bail!("mean = {mean} must lie in [0,1]");
    }
    let m = match m {
        Some(m) => m,
        None => threshold_sample_size(z, rho, delta, 700.0, 1.0).map_err(anyhow::Error::new)?,
    };
    let root = RandomTape::new(seed);
    let mut csv = String::from("trial,b,phi_bar,z0\n");
    for i in 0..trials as u64 {
        let mut data = root.child("trial-data", i).stream();
        let items: Vec<usize> = (0..m).map(|_| (data.next_f64() < mean) as usize).collect();
        let mut cutoff = root.child("trial", i).child("cutoff", 0).stream();
        let o = rthreshold(&items, &p, |x| x as f64, &mut cutoff, 0)
            .map_err(anyhow::Error::new)?;
        writeln!(csv, "{},{},{},{}", i, o.bit as u8, o.phi_mean, o.cutoff).unwrap();
    }
    match out {
        Some(path) => {
            std::fs::write(&path, csv).with_context(|| format!("cannot write {}", path.display()))?
        }
        None => print!("{csv}"),
    }
    Ok(())
}

fn print_verdict(v: &SuiteVerdict) {
    for c in &v.checks {
        println!(
            "[{}] {}/{}: {}",
            if c.passed { "PASS" } else { "FAIL" },
            v.suite,
            c.name,
            c.detail
        );
    }
}

fn suite_csv(v: &SuiteVerdict) -> String {
    let mut out = String::from("suite,check,passed,detail\n");
    for c in &v.checks {
        writeln!(
            out,
            "{},{},{},\"{}\"",
            v.suite,
            c.name,
            c.passed,
            c.detail.replace('"', "'")
        )
        .unwrap();
    }
    out
}

fn verify(
    suite: &str,
    seed: u64,
    trials: Option<usize>,
    pairs: Option<usize>,
    out_dir: Option<PathBuf>,
) -> Result<bool> {
    let mut effort = Effort::default();
    if let Some(t) = trials {
        effort.trials = t;
    }
    if let Some(p) = pairs {
        effort.pairs = p;
    }
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else {
        vec![suite]
    };
    let mut verdicts = Vec::new();
    for name in names {
        let v = run_suite(name, effort, seed).map_err(anyhow::Error::new)?;
        print_verdict(&v);
        verdicts.push(v);
    }
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(&dir)?;
        io::write_json(&dir.join("verdict.json"), &verdicts)?;
        for v in &verdicts {
            std::fs::write(dir.join(format!("suite-{}.csv", v.suite)), suite_csv(v))?;
        }
    }
    Ok(verdicts.iter().all(|v| v.passed))
}

fn dispatch(cli: Cli) -> Result<bool> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .ok();
    }
    match cli.cmd {
        Cmd::ThresholdTest {
            z,
            rho,
            delta,
            mean,
            trials,
            seed,
            m,
            out,
        } => {
            threshold_test(z, rho, delta, mean, trials, seed, m, out)?;
            Ok(true)
        }
        Cmd::RboostStar(args) => {
            let cfg = args.into_config(Algorithm::RboostStar)?;
            run_experiment(&cfg)?;
            println!("wrote {}", cfg.out_dir.display());
            Ok(true)
        }
        Cmd::Rmetaboost(args) => {
            let cfg = args.into_config(Algorithm::Rmetaboost)?;
            let summary = run_experiment(&cfg)?;
            let failed = summary.rows.iter().filter(|r| r.failed).count();
            println!(
                "wrote {} ({} trials, {} failed)",
                cfg.out_dir.display(),
                summary.rows.len(),
                failed
            );
            Ok(true)
        }
        Cmd::Verify {
            suite,
            seed,
            trials,
            pairs,
            out_dir,
        } => verify(&suite, seed, trials, pairs, out_dir),
        Cmd::GenDomain {
            size,
            margin,
            seed,
            clustered,
            out,
        } => {
            let ld = if clustered {
                clustered_domain()
            } else {
                margin_domain(size, margin, seed).map_err(anyhow::Error::new)?
            };
            io::save_domain(&out, &ld)?;
            println!("wrote {}", out.display());
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
