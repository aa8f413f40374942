//! Experiment harness on top of `karger_core`: segmentation of grayscale
//! images, semi-supervised learning on k-NN graphs, oracle verification,
//! the star counterexample and scaling benchmarks.

pub mod commands;
pub mod config;
pub mod io;
pub mod synth;

pub use config::{ExperimentConfig, Method, MethodArg, Mode};
