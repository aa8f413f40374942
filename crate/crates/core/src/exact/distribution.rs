//! Exact distributions over seed-separating spanning forests.
//!
//! Two independent evaluators of the seeded contraction distribution are
//! provided: [`contraction_distribution`] sums over all orderings of each
//! enumerated forest, while [`contraction_distribution_by_sequences`]
//! follows every possible contraction sequence from the start. They share
//! only the closure computation.

use std::collections::BTreeMap;

use super::forests::{contracted_state, enumerate_seed_forests, forest_size, remaining_weight};
use crate::error::{Error, Result};
use crate::graph::{Graph, SeedMap};

/// Forest size limit for the factorial-time evaluators.
pub const MAX_ORDERED_EDGES: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForestFamily {
    Gibbs,
    Contraction,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ForestDistribution {
    /// `(sorted edge indices, probability)`, ordered by forest.
    pub forests: Vec<(Vec<usize>, f64)>,
    pub family: ForestFamily,
    /// Partition function, for the Gibbs family.
    pub partition_function: Option<f64>,
}

impl ForestDistribution {
    pub fn total_probability(&self) -> f64 {
        self.forests.iter().map(|(_, p)| p).sum()
    }

    pub fn probability_of(&self, forest: &[usize]) -> f64 {
        let mut key = forest.to_vec();
        key.sort_unstable();
        self.forests
            .binary_search_by(|(f, _)| f.as_slice().cmp(&key))
            .map_or(0.0, |i| self.forests[i].1)
    }

    /// `rows[v][l - 1]`: probability that the sampled forest connects `v`
    /// to the seeds of label `l`.
    pub fn marginals(&self, graph: &Graph, seeds: &SeedMap) -> Vec<Vec<f64>> {
        let n = graph.vertex_count();
        let mut rows = vec![vec![0.0; seeds.k()]; n];
        for (forest, p) in &self.forests {
            let mut ds = contracted_state(graph, seeds, forest).expect("forest is contractible");
            for (v, row) in rows.iter_mut().enumerate() {
                let l = ds.label(v);
                row[l as usize - 1] += p;
            }
        }
        rows
    }

    /// Largest absolute probability difference over the union of supports.
    pub fn max_difference(&self, other: &ForestDistribution) -> f64 {
        let mut keys: Vec<&Vec<usize>> = self
            .forests
            .iter()
            .chain(&other.forests)
            .map(|(f, _)| f)
            .collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .map(|f| (self.probability_of(f) - other.probability_of(f)).abs())
            .fold(0.0, f64::max)
    }
}

fn forest_weight(graph: &Graph, forest: &[usize]) -> f64 {
    forest.iter().map(|&e| graph.edge(e).weight).product()
}

/// Gibbs distribution over `F_s`: probability proportional to the product
/// of forest edge weights.
pub fn gibbs_distribution(graph: &Graph, seeds: &SeedMap) -> Result<ForestDistribution> {
    let forests = enumerate_seed_forests(graph, seeds)?;
    let weights: Vec<f64> = forests.iter().map(|f| forest_weight(graph, f)).collect();
    let z: f64 = weights.iter().sum();
    if z <= 0.0 {
        return Err(Error::Degenerate("partition function is zero".into()));
    }
    Ok(ForestDistribution {
        forests: forests
            .into_iter()
            .zip(weights)
            .map(|(f, w)| (f, w / z))
            .collect(),
        family: ForestFamily::Gibbs,
        partition_function: Some(z),
    })
}

fn ordered_guard(graph: &Graph, seeds: &SeedMap) -> Result<()> {
    seeds.check_len(graph.vertex_count())?;
    let size = forest_size(graph, seeds);
    if size > MAX_ORDERED_EDGES {
        return Err(Error::TooLarge {
            what: "contractions per run",
            actual: size,
            limit: MAX_ORDERED_EDGES,
        });
    }
    Ok(())
}

/// Probability that seeded contraction produces each forest, summing over
/// every ordering of the forest's edges the product of stepwise
/// probabilities `w(e_i) / c(E \ C({e_1..e_(i-1)}))`.
pub fn contraction_distribution(graph: &Graph, seeds: &SeedMap) -> Result<ForestDistribution> {
    ordered_guard(graph, seeds)?;
    let forests = enumerate_seed_forests(graph, seeds)?;
    let mut out = Vec::with_capacity(forests.len());
    for forest in forests {
        let mut prefix = Vec::with_capacity(forest.len());
        let mut used = vec![false; forest.len()];
        let p = sum_over_orderings(graph, seeds, &forest, &mut used, &mut prefix)?;
        out.push((forest, p));
    }
    Ok(ForestDistribution {
        forests: out,
        family: ForestFamily::Contraction,
        partition_function: None,
    })
}

fn sum_over_orderings(
    graph: &Graph,
    seeds: &SeedMap,
    forest: &[usize],
    used: &mut [bool],
    prefix: &mut Vec<usize>,
) -> Result<f64> {
    if prefix.len() == forest.len() {
        return Ok(1.0);
    }
    let available = remaining_weight(graph, seeds, prefix);
    if available <= 0.0 {
        return Err(Error::Degenerate(format!(
            "no contractible weight left after {prefix:?}"
        )));
    }
    let mut total = 0.0;
    for i in 0..forest.len() {
        if used[i] {
            continue;
        }
        let w = graph.edge(forest[i]).weight;
        if w == 0.0 {
            continue;
        }
        used[i] = true;
        prefix.push(forest[i]);
        total += w / available * sum_over_orderings(graph, seeds, forest, used, prefix)?;
        prefix.pop();
        used[i] = false;
    }
    Ok(total)
}

/// Same distribution as [`contraction_distribution`], obtained by following
/// every contraction sequence: from each state, each still-contractible
/// edge is taken with probability proportional to its weight until `k`
/// clusters remain.
pub fn contraction_distribution_by_sequences(graph: &Graph, seeds: &SeedMap) -> Result<ForestDistribution> {
    ordered_guard(graph, seeds)?;
    let mut acc: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
    let mut prefix = Vec::new();
    follow_sequences(graph, seeds, 1.0, &mut prefix, &mut acc)?;
    Ok(ForestDistribution {
        forests: acc.into_iter().collect(),
        family: ForestFamily::Contraction,
        partition_function: None,
    })
}

fn follow_sequences(
    graph: &Graph,
    seeds: &SeedMap,
    probability: f64,
    prefix: &mut Vec<usize>,
    acc: &mut BTreeMap<Vec<usize>, f64>,
) -> Result<()> {
    let mut ds = contracted_state(graph, seeds, prefix).expect("prefix is contractible");
    if ds.cluster_count() == seeds.k() {
        let mut key = prefix.clone();
        key.sort_unstable();
        *acc.entry(key).or_insert(0.0) += probability;
        return Ok(());
    }
    let live: Vec<usize> = (0..graph.edge_count())
        .filter(|&i| {
            let e = graph.edge(i);
            let (ru, rv) = (ds.find(e.u), ds.find(e.v));
            let (lu, lv) = (ds.root_label(ru), ds.root_label(rv));
            ru != rv && !(lu != 0 && lv != 0)
        })
        .collect();
    let total: f64 = live.iter().map(|&i| graph.edge(i).weight).sum();
    if total <= 0.0 {
        return Err(Error::Degenerate(format!(
            "no contractible weight left after {prefix:?}"
        )));
    }
    for i in live {
        let w = graph.edge(i).weight;
        if w == 0.0 {
            continue;
        }
        prefix.push(i);
        follow_sequences(graph, seeds, probability * w / total, prefix, acc)?;
        prefix.pop();
    }
    Ok(())
}
