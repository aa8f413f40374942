//! Exact outcome distribution of general contraction on small graphs.

use std::collections::HashMap;

use super::mincut::{brute_force_global_mincut, brute_force_st_mincut, values_tie};
use crate::contraction::{label_clusters, ContractedGraph, ScoreFunction, Terminals};
use crate::error::{Error, Result};
use crate::graph::{same_partition, Graph};

/// Vertex limit for the exact contraction recursion.
pub const MAX_EXACT_VERTICES: usize = 8;

/// Every final two-cluster labeling reachable by
/// [`general_contraction_run`](crate::contraction::general_contraction_run)
/// with its exact probability. Labels follow the same convention as the
/// sampler (the side of `s`, or of vertex 0, is label 1).
///
/// Sequences are merged by intermediate partition, so the work is bounded
/// by the number of set partitions of the vertices.
pub fn exact_cut_distribution(
    graph: &Graph,
    score: &dyn ScoreFunction,
    s: Option<usize>,
    t: Option<usize>,
) -> Result<Vec<(Vec<u32>, f64)>> {
    let n = graph.vertex_count();
    if n > MAX_EXACT_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            actual: n,
            limit: MAX_EXACT_VERTICES,
        });
    }
    for v in [s, t].into_iter().flatten() {
        if v >= n {
            return Err(Error::InvalidArgument(format!("terminal {v} out of range")));
        }
    }
    if s.is_some() && s == t {
        return Err(Error::InvalidArgument("s and t must differ".into()));
    }

    let mut level: HashMap<Vec<usize>, f64> = HashMap::new();
    level.insert((0..n).collect(), 1.0);
    for _ in 2..n {
        let mut next: HashMap<Vec<usize>, f64> = HashMap::new();
        for (partition, p) in level {
            let state = ContractedGraph::from_partition(graph, &partition);
            let terminals = Terminals {
                s: s.map(|v| state.cluster_of(v)),
                t: t.map(|v| state.cluster_of(v)),
            };
            let scores: Vec<f64> = state
                .edges()
                .iter()
                .map(|e| score.score(e, &state, terminals))
                .collect();
            if let Some(&bad) = scores.iter().find(|x| !(x.is_finite() && **x >= 0.0)) {
                return Err(Error::InvalidScore {
                    name: score.name().to_string(),
                    value: bad,
                });
            }
            let total: f64 = scores.iter().sum();
            if total <= 0.0 {
                return Err(Error::Degenerate(format!(
                    "score `{}` is zero on every live edge of a reachable state",
                    score.name()
                )));
            }
            for (i, &x) in scores.iter().enumerate() {
                if x == 0.0 {
                    continue;
                }
                let mut after = state.clone();
                after.contract(i);
                *next.entry(after.partition().to_vec()).or_insert(0.0) += p * x / total;
            }
        }
        level = next;
    }

    let anchors: Vec<(usize, u32)> = s.map(|s| (s, 1)).into_iter().chain(t.map(|t| (t, 2))).collect();
    let mut out: Vec<(Vec<u32>, f64)> = level
        .into_iter()
        .map(|(partition, p)| (label_clusters(&partition, &anchors), p))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Exact probability that one general contraction run returns a minimum
/// s-t cut (or a global minimum cut when no terminals are given).
pub fn exact_karger_success(
    graph: &Graph,
    s: Option<usize>,
    t: Option<usize>,
    score: &dyn ScoreFunction,
) -> Result<f64> {
    let distribution = exact_cut_distribution(graph, score, s, t)?;
    let minimum = match (s, t) {
        (Some(s), Some(t)) => brute_force_st_mincut(graph, s, t)?.value,
        _ => brute_force_global_mincut(graph)?.value,
    };
    Ok(distribution
        .iter()
        .filter(|(assignment, _)| {
            let separates = match (s, t) {
                (Some(s), Some(t)) => assignment[s] != assignment[t],
                _ => true,
            };
            separates && values_tie(graph.cut_weight(assignment), minimum)
        })
        .map(|(_, p)| p)
        .sum())
}

/// Exact probability of ending in the partition `target`.
pub fn probability_of_partition(distribution: &[(Vec<u32>, f64)], target: &[u32]) -> f64 {
    distribution
        .iter()
        .filter(|(a, _)| same_partition(a, target))
        .map(|(_, p)| p)
        .sum()
}
