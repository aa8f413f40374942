//! Karger-style edge contraction for cuts, seeded segmentation and
//! graph-based semi-supervised learning.
//!
//! The crate is organized as
//!
//! * [`graph`]: graphs, seed maps, union-find, generators and text formats,
//! * [`contraction`]: Karger, general score-driven and seeded contraction,
//! * [`potentials`]: Monte Carlo contraction potential, random walker
//!   potential and watershed labeling,
//! * [`exact`]: brute-force oracles and exact forest distributions for
//!   small graphs,
//! * [`metrics`]: adjusted Rand index, variation of information, accuracy.

pub mod contraction;
pub mod error;
pub mod exact;
pub mod graph;
pub mod metrics;
pub mod potentials;
pub mod rng;
pub mod stats;

pub use contraction::{
    general_contraction_run, karger_run, seeded_contraction_run, weighted_permutation, ContractionTrace,
    ScoreFunction,
};
pub use error::{Error, Result};
pub use graph::{CutResult, DisjointSet, Graph, SeedMap};
pub use metrics::{LabelingPair, Scores};
pub use potentials::{Potential, PotentialMethod};
