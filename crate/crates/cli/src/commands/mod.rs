//! Subcommand implementations. Each `cmd_*` function loads its inputs,
//! writes its outputs and returns a report; the pure parts are exposed
//! separately for tests.

pub mod bench;
pub mod counterexample;
pub mod graph;
pub mod pipeline;
pub mod segment;
pub mod ssl;
pub mod synth;
pub mod verify;

pub use pipeline::{MethodOutcome, PipelineReport};
