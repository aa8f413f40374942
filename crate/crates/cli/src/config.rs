use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::ValueEnum;

/// A single labeling method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum Method {
    Contraction,
    Rw,
    Watershed,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Contraction, Method::Rw, Method::Watershed];

    pub fn name(self) -> &'static str {
        match self {
            Method::Contraction => "contraction",
            Method::Rw => "rw",
            Method::Watershed => "watershed",
        }
    }
}

/// `--method` value: one method or all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Contraction,
    Rw,
    Watershed,
    All,
}

impl MethodArg {
    pub fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Contraction => vec![Method::Contraction],
            MethodArg::Rw => vec![Method::Rw],
            MethodArg::Watershed => vec![Method::Watershed],
            MethodArg::All => Method::ALL.to_vec(),
        }
    }
}

/// Which kind of graph an experiment builds; picks the default beta.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Segment,
    Ssl,
    Graph,
}

/// Hand-tuned defaults per mode and method. Watershed only depends on the
/// weight order, so any positive beta gives the same result.
pub fn default_beta(mode: Mode, method: Method) -> Option<f64> {
    match (mode, method) {
        (Mode::Graph, _) => None,
        (Mode::Segment, Method::Contraction | Method::Watershed) => Some(10.0),
        (Mode::Segment, Method::Rw) => Some(20.0),
        (Mode::Ssl, Method::Contraction | Method::Watershed) => Some(2.0),
        (Mode::Ssl, Method::Rw) => Some(5.0),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub mode: Mode,
    pub methods: Vec<Method>,
    /// Overrides the per-method default for every method.
    pub beta: Option<f64>,
    pub runs: usize,
    pub rng_seed: u64,
    pub knn: usize,
    pub tolerance: f64,
    pub inputs: Vec<PathBuf>,
    pub output: PathBuf,
    pub ground_truth: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn new(mode: Mode, methods: Vec<Method>) -> Self {
        ExperimentConfig {
            mode,
            methods,
            beta: None,
            runs: karger_core::potentials::DEFAULT_RUNS,
            rng_seed: 0,
            knn: 10,
            tolerance: karger_core::potentials::DEFAULT_TOLERANCE,
            inputs: Vec::new(),
            output: PathBuf::from("."),
            ground_truth: None,
        }
    }

    pub fn beta_for(&self, method: Method) -> Option<f64> {
        match self.mode {
            Mode::Graph => None,
            _ => self.beta.or(default_beta(self.mode, method)),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.methods.is_empty() {
            bail!("no method selected");
        }
        if let Some(beta) = self.beta {
            if !(beta >= 0.0 && beta.is_finite()) {
                bail!("--beta must be finite and >= 0, got {beta}");
            }
            if self.mode == Mode::Graph {
                bail!("--beta does not apply to explicit edge lists");
            }
        }
        if self.runs == 0 {
            bail!("--runs must be >= 1");
        }
        if self.knn == 0 {
            bail!("--knn must be >= 1");
        }
        if !(self.tolerance > 0.0 && self.tolerance < 1.0) {
            bail!("--tolerance must be in (0, 1), got {}", self.tolerance);
        }
        for path in self.inputs.iter().chain(&self.ground_truth) {
            if !path.exists() {
                bail!("input {} does not exist", path.display());
            }
        }
        Ok(())
    }
}
