use std::fs;

use anyhow::{bail, Context, Result};
use karger_core::graph::{load_graph, parse_seeds};

use super::pipeline::{run_methods, summary, write_outputs, PipelineReport};
use crate::config::ExperimentConfig;
use crate::io::parse_labels;

/// `karger graph EDGES SEEDS`: runs the methods on an explicit edge list.
pub fn cmd_graph(cfg: &ExperimentConfig) -> Result<(PipelineReport, String)> {
    cfg.validate()?;
    let [graph_path, seeds_path] = cfg.inputs.as_slice() else {
        bail!("graph needs an edge list and a seed file");
    };
    let read =
        |p: &std::path::Path| fs::read_to_string(p).with_context(|| format!("reading {}", p.display()));
    let graph =
        load_graph(&read(graph_path)?).with_context(|| format!("parsing {}", graph_path.display()))?;
    let n = graph.vertex_count();
    let seeds =
        parse_seeds(&read(seeds_path)?, n).with_context(|| format!("parsing {}", seeds_path.display()))?;
    let truth = cfg
        .ground_truth
        .as_deref()
        .map(|p| parse_labels(&read(p)?, n))
        .transpose()?;
    let report = run_methods(cfg, &seeds, truth.as_deref(), |_| Ok(graph.clone()))?;
    write_outputs(&report, &cfg.output)?;
    Ok((report.clone(), summary(&report, &seeds)))
}
