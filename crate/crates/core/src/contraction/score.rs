use super::contracted::{ContractedGraph, LiveEdge};
use crate::graph::Graph;

/// Current cluster ids of the optional terminals `s` and `t`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Terminals {
    pub s: Option<usize>,
    pub t: Option<usize>,
}

/// Edge score driving the general contraction algorithm: at each step a
/// live edge is contracted with probability proportional to its score.
///
/// Scores must be finite and non-negative.
pub trait ScoreFunction: Send + Sync {
    fn name(&self) -> &str;

    fn score(&self, edge: &LiveEdge, state: &ContractedGraph<'_>, terminals: Terminals) -> f64;
}

/// Karger's rule: the (merged) edge weight.
#[derive(Debug, Clone, Copy, Default)]
pub struct WeightScore;

impl ScoreFunction for WeightScore {
    fn name(&self) -> &str {
        "weight"
    }

    fn score(&self, edge: &LiveEdge, _: &ContractedGraph<'_>, _: Terminals) -> f64 {
        edge.weight
    }
}

/// Edge weight, except that the edge joining `s` and `t` scores zero.
#[derive(Debug, Clone, Copy, Default)]
pub struct StScore;

pub fn st_score() -> StScore {
    StScore
}

impl ScoreFunction for StScore {
    fn name(&self) -> &str {
        "s-t"
    }

    fn score(&self, edge: &LiveEdge, _: &ContractedGraph<'_>, terminals: Terminals) -> f64 {
        match (terminals.s, terminals.t) {
            (Some(s), Some(t)) if edge.joins(s, t) => 0.0,
            _ => edge.weight,
        }
    }
}

/// Zero on a given cut set, one elsewhere. A merged edge is in the cut set
/// when any of its original edges is.
#[derive(Debug, Clone)]
pub struct OracleScore {
    in_cut: Vec<bool>,
}

impl OracleScore {
    pub fn new(graph: &Graph, cut_set: &[usize]) -> Self {
        let mut in_cut = vec![false; graph.edge_count()];
        for &e in cut_set {
            in_cut[e] = true;
        }
        Self { in_cut }
    }
}

pub fn oracle_score(graph: &Graph, cut_set: &[usize]) -> OracleScore {
    OracleScore::new(graph, cut_set)
}

impl ScoreFunction for OracleScore {
    fn name(&self) -> &str {
        "oracle"
    }

    fn score(&self, edge: &LiveEdge, _: &ContractedGraph<'_>, _: Terminals) -> f64 {
        if edge.members.iter().any(|&e| self.in_cut[e]) {
            0.0
        } else {
            1.0
        }
    }
}
