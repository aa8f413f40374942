//! Agreement between a predicted and a ground-truth labeling: adjusted
//! Rand index, variation of information (in nats) and accuracy.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::SeedMap;

type Counts<K> = HashMap<K, u64>;

/// Ground truth and prediction over the same samples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingPair {
    truth: Vec<u32>,
    predicted: Vec<u32>,
}

impl LabelingPair {
    pub fn new(truth: Vec<u32>, predicted: Vec<u32>) -> Result<Self> {
        if truth.len() != predicted.len() {
            return Err(Error::InvalidArgument(format!(
                "labelings differ in length: {} vs {}",
                truth.len(),
                predicted.len()
            )));
        }
        if truth.iter().chain(&predicted).any(|&l| l == 0) {
            return Err(Error::InvalidArgument("labels must be positive".into()));
        }
        Ok(Self { truth, predicted })
    }

    /// Restricts full-graph labelings to the unlabeled (non-seed) vertices.
    pub fn unlabeled_only(truth: &[u32], predicted: &[u32], seeds: &SeedMap) -> Result<Self> {
        if truth.len() != seeds.len() || predicted.len() != seeds.len() {
            return Err(Error::InvalidArgument("labeling and seed lengths differ".into()));
        }
        let keep = |v: &usize| !seeds.is_seed(*v);
        Self::new(
            (0..truth.len()).filter(keep).map(|v| truth[v]).collect(),
            (0..truth.len()).filter(keep).map(|v| predicted[v]).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.truth.len()
    }

    pub fn is_empty(&self) -> bool {
        self.truth.is_empty()
    }

    pub fn truth(&self) -> &[u32] {
        &self.truth
    }

    pub fn predicted(&self) -> &[u32] {
        &self.predicted
    }

    /// Joint, truth and predicted label counts.
    fn contingency(&self) -> (Counts<(u32, u32)>, Counts<u32>, Counts<u32>) {
        let mut joint = HashMap::new();
        let mut rows = HashMap::new();
        let mut cols = HashMap::new();
        for (&a, &b) in self.truth.iter().zip(&self.predicted) {
            *joint.entry((a, b)).or_insert(0) += 1;
            *rows.entry(a).or_insert(0) += 1;
            *cols.entry(b).or_insert(0) += 1;
        }
        (joint, rows, cols)
    }
}

fn pairs(c: u64) -> f64 {
    let c = c as f64;
    c * (c - 1.0) / 2.0
}

/// Adjusted Rand index from the contingency table.
///
/// When both labelings are a single cluster (or both all singletons) the
/// chance correction is undefined; identical partitions then score 1.
pub fn adjusted_rand_index(pair: &LabelingPair) -> Result<f64> {
    if pair.len() < 2 {
        return Err(Error::Metric("ARI needs at least 2 samples".into()));
    }
    let (joint, rows, cols) = pair.contingency();
    let index: f64 = joint.values().map(|&c| pairs(c)).sum();
    let sum_rows: f64 = rows.values().map(|&c| pairs(c)).sum();
    let sum_cols: f64 = cols.values().map(|&c| pairs(c)).sum();
    let expected = sum_rows * sum_cols / pairs(pair.len() as u64);
    let max = 0.5 * (sum_rows + sum_cols);
    if max == expected {
        return if joint.len() == rows.len() && joint.len() == cols.len() {
            Ok(1.0)
        } else {
            Err(Error::Metric(
                "ARI undefined: chance-corrected denominator is zero".into(),
            ))
        };
    }
    Ok((index - expected) / (max - expected))
}

/// Variation of information `H(X|Y) + H(Y|X)` in nats.
///
/// Summed per contingency cell as `n_ij/n * (ln(n_i/n_ij) + ln(n_j/n_ij))`,
/// so matching partitions give exactly 0 regardless of summation order.
pub fn variation_of_information(pair: &LabelingPair) -> Result<f64> {
    if pair.is_empty() {
        return Err(Error::Metric("VI needs at least 1 sample".into()));
    }
    let n = pair.len() as f64;
    let (joint, rows, cols) = pair.contingency();
    let vi: f64 = joint
        .iter()
        .map(|(&(a, b), &c)| {
            let c = c as f64;
            c / n * ((rows[&a] as f64 / c).ln() + (cols[&b] as f64 / c).ln())
        })
        .sum();
    Ok(vi)
}

/// Fraction of samples whose predicted label equals the true label.
pub fn accuracy(pair: &LabelingPair) -> Result<f64> {
    if pair.is_empty() {
        return Err(Error::Metric("accuracy needs at least 1 sample".into()));
    }
    let hits = pair
        .truth
        .iter()
        .zip(&pair.predicted)
        .filter(|(a, b)| a == b)
        .count();
    Ok(hits as f64 / pair.len() as f64)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scores {
    pub ari: f64,
    pub accuracy: f64,
    /// Variation of information in nats.
    pub voi: f64,
}

pub fn evaluate(pair: &LabelingPair) -> Result<Scores> {
    Ok(Scores {
        ari: adjusted_rand_index(pair)?,
        accuracy: accuracy(pair)?,
        voi: variation_of_information(pair)?,
    })
}

/// CSV with header `method,ari,acc,voi` (VoI in nats).
pub fn scores_csv<'a>(rows: impl IntoIterator<Item = (&'a str, Scores)>) -> String {
    let mut out = String::from("method,ari,acc,voi\n");
    for (method, s) in rows {
        writeln!(out, "{method},{},{},{}", s.ari, s.accuracy, s.voi).unwrap();
    }
    out
}
