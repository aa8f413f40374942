//! Shared method fan-out for segment, ssl and graph.

use std::path::Path;

use anyhow::{Context, Result};
use karger_core::metrics::{evaluate, scores_csv, LabelingPair, Scores};
use karger_core::potentials::{
    argmax_labeling, karger_potential, random_walker_potential, watershed_labeling, Potential,
};
use karger_core::{CutResult, Graph, SeedMap};

use crate::config::{ExperimentConfig, Method};
use crate::io::{format_labels, write_text};

#[derive(Debug, Clone)]
pub struct MethodOutcome {
    pub method: Method,
    pub beta: Option<f64>,
    /// Absent for watershed.
    pub potential: Option<Potential>,
    pub labeling: CutResult,
    /// Against the ground truth over unlabeled vertices.
    pub scores: Option<Scores>,
}

#[derive(Debug, Clone)]
pub struct PipelineReport {
    pub outcomes: Vec<MethodOutcome>,
    pub unlabeled: usize,
}

impl PipelineReport {
    pub fn outcome(&self, method: Method) -> Option<&MethodOutcome> {
        self.outcomes.iter().find(|o| o.method == method)
    }

    /// Fraction of vertices on which two methods pick the same label.
    pub fn agreement(&self, a: Method, b: Method) -> Option<f64> {
        let (a, b) = (self.outcome(a)?, self.outcome(b)?);
        let same = a
            .labeling
            .assignment
            .iter()
            .zip(&b.labeling.assignment)
            .filter(|(x, y)| x == y)
            .count();
        Some(same as f64 / a.labeling.assignment.len() as f64)
    }

    /// Mean `|p - 1/k|` over unlabeled vertices, for each method with a
    /// potential.
    pub fn confidence(&self, seeds: &SeedMap) -> Vec<(Method, f64)> {
        self.outcomes
            .iter()
            .filter_map(|o| o.potential.as_ref().map(|p| (o.method, p.confidence(seeds))))
            .collect()
    }
}

/// Scores over unlabeled vertices. With every vertex seeded the labeling is
/// trivially perfect.
pub fn score_unlabeled(truth: &[u32], predicted: &[u32], seeds: &SeedMap) -> Result<Scores> {
    if seeds.seeded_count() == seeds.len() {
        return Ok(Scores {
            ari: 1.0,
            accuracy: 1.0,
            voi: 0.0,
        });
    }
    let pair = LabelingPair::unlabeled_only(truth, predicted, seeds)?;
    if pair.len() < 2 {
        // ARI needs two samples
        let accuracy = karger_core::metrics::accuracy(&pair)?;
        return Ok(Scores {
            ari: accuracy,
            accuracy,
            voi: 0.0,
        });
    }
    Ok(evaluate(&pair)?)
}

/// Runs every configured method. `build` returns the graph for a given
/// beta (`None` when weights are fixed).
pub fn run_methods(
    cfg: &ExperimentConfig,
    seeds: &SeedMap,
    truth: Option<&[u32]>,
    mut build: impl FnMut(Option<f64>) -> Result<Graph>,
) -> Result<PipelineReport> {
    let mut outcomes = Vec::new();
    for &method in &cfg.methods {
        let beta = cfg.beta_for(method);
        let graph = build(beta).with_context(|| format!("building graph for {}", method.name()))?;
        let (potential, labeling) = match method {
            Method::Contraction => {
                let p = karger_potential(&graph, seeds, cfg.runs, cfg.rng_seed)?;
                let l = argmax_labeling(&graph, &p, seeds, cfg.rng_seed)?;
                (Some(p), l)
            }
            Method::Rw => {
                let p = random_walker_potential(&graph, seeds, cfg.tolerance)?;
                let l = argmax_labeling(&graph, &p, seeds, cfg.rng_seed)?;
                (Some(p), l)
            }
            Method::Watershed => (None, watershed_labeling(&graph, seeds, cfg.rng_seed)?),
        };
        let scores = truth
            .map(|t| score_unlabeled(t, &labeling.assignment, seeds))
            .transpose()?;
        outcomes.push(MethodOutcome {
            method,
            beta,
            potential,
            labeling,
            scores,
        });
    }
    Ok(PipelineReport {
        outcomes,
        unlabeled: seeds.len() - seeds.seeded_count(),
    })
}

/// Writes `potential_<method>.csv`, `labels_<method>.txt` and, with ground
/// truth, `metrics.csv` into `dir`.
pub fn write_outputs(report: &PipelineReport, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for o in &report.outcomes {
        if let Some(p) = &o.potential {
            write_text(
                &dir.join(format!("potential_{}.csv", o.method.name())),
                &p.to_csv(),
            )?;
        }
        write_text(
            &dir.join(format!("labels_{}.txt", o.method.name())),
            &format_labels(&o.labeling.assignment),
        )?;
    }
    let scored: Vec<(&str, Scores)> = report
        .outcomes
        .iter()
        .filter_map(|o| o.scores.map(|s| (o.method.name(), s)))
        .collect();
    if !scored.is_empty() {
        write_text(&dir.join("metrics.csv"), &scores_csv(scored))?;
    }
    Ok(())
}

/// Human-readable summary printed by the commands.
pub fn summary(report: &PipelineReport, seeds: &SeedMap) -> String {
    let mut out = String::new();
    for o in &report.outcomes {
        let beta = o.beta.map_or("-".to_string(), |b| format!("{b}"));
        out.push_str(&format!(
            "{:<12} beta={:<6} cut={:.6e}",
            o.method.name(),
            beta,
            o.labeling.cut_weight
        ));
        if let Some(s) = o.scores {
            out.push_str(&format!(
                " ari={:.4} acc={:.4} voi={:.4}",
                s.ari, s.accuracy, s.voi
            ));
        }
        out.push('\n');
    }
    let conf = report.confidence(seeds);
    if conf.len() >= 2 {
        let parts: Vec<String> = conf.iter().map(|(m, c)| format!("{}={c:.4}", m.name())).collect();
        out.push_str(&format!(
            "diagnostic (not a check): mean |p - 1/k| over unlabeled vertices: {}\n",
            parts.join(" ")
        ));
    }
    out
}
