use std::fs;

use anyhow::{bail, Context, Result};
use karger_core::graph::{euclidean_distances, make_knn_graph, parse_seeds};
use karger_core::SeedMap;

use super::pipeline::{run_methods, summary, write_outputs, PipelineReport};
use crate::config::ExperimentConfig;
use crate::io::{parse_labels, read_features};

/// Semi-supervised labeling of feature rows on a symmetrized k-NN graph.
pub fn ssl(
    features: &[Vec<f64>],
    seeds: &SeedMap,
    truth: Option<&[u32]>,
    cfg: &ExperimentConfig,
) -> Result<PipelineReport> {
    let n = features.len();
    if cfg.knn >= n {
        bail!(
            "--knn {} must be smaller than the number of points ({n})",
            cfg.knn
        );
    }
    if seeds.len() != n {
        bail!("seed map covers {} points, features have {n}", seeds.len());
    }
    if let Some(t) = truth {
        let classes = t.iter().copied().max().unwrap_or(0) as usize;
        if classes > seeds.k() {
            bail!(
                "ground truth has {classes} classes but seeds cover only {}",
                seeds.k()
            );
        }
    }
    let distances = euclidean_distances(features);
    run_methods(cfg, seeds, truth, |beta| {
        Ok(make_knn_graph(&distances, cfg.knn, beta.unwrap_or(0.0))?)
    })
}

/// `karger ssl FEATURES LABELS`: inputs are `cfg.inputs[0..2]`.
pub fn cmd_ssl(cfg: &ExperimentConfig) -> Result<(PipelineReport, String)> {
    cfg.validate()?;
    let [features_path, labels_path] = cfg.inputs.as_slice() else {
        bail!("ssl needs a feature CSV and a label file");
    };
    let features = read_features(features_path)?;
    let n = features.len();
    let text =
        fs::read_to_string(labels_path).with_context(|| format!("reading {}", labels_path.display()))?;
    let seeds = parse_seeds(&text, n).with_context(|| format!("parsing {}", labels_path.display()))?;
    let truth = cfg
        .ground_truth
        .as_deref()
        .map(|p| -> Result<Vec<u32>> {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            parse_labels(&text, n)
        })
        .transpose()?;
    let report = ssl(&features, &seeds, truth.as_deref(), cfg)?;
    write_outputs(&report, &cfg.output)?;
    let mut text = summary(&report, &seeds);
    text.push_str(&format!("unlabeled points: {}\n", report.unlabeled));
    Ok((report, text))
}
