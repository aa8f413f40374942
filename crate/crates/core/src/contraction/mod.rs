//! Edge-contraction algorithms.
//!
//! * [`karger_run`]: Karger's algorithm, contracting weight-proportional
//!   random edges until two clusters remain.
//! * [`general_contraction_run`]: the same loop driven by an arbitrary
//!   [`ScoreFunction`], with optional terminals `s` and `t` that follow
//!   their clusters through merges.
//! * [`seeded_contraction_run`]: contraction that never merges clusters
//!   carrying different seed labels and stops at `k` clusters.
//!
//! Karger and seeded runs scan a weighted random permutation of the edges
//! once, tracking clusters in a [`DisjointSet`]; each scan costs
//! `O(m α(n))` after the permutation draw. General runs rebuild the
//! contracted graph at every step (`O(n m)`) because scores may look at the
//! whole adjacency structure.

mod contracted;
mod permutation;
mod score;

pub use contracted::{ContractedGraph, LiveEdge};
pub use permutation::weighted_permutation;
pub(crate) use permutation::weighted_permutation_with;
pub use score::{oracle_score, st_score, OracleScore, ScoreFunction, StScore, Terminals, WeightScore};

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{CutResult, DisjointSet, Graph, SeedMap};
use crate::rng::rng_from_seed;

/// Record of one contraction run.
#[derive(Debug, Clone, PartialEq)]
pub struct ContractionTrace {
    /// Original edge indices in contraction order.
    pub contracted: Vec<usize>,
    pub cut: CutResult,
    pub rng_seed: u64,
    /// `(vertex, label)` pairs fixing which cluster gets which label.
    anchors: Vec<(usize, u32)>,
}

impl ContractionTrace {
    /// Rebuilds the cut from the contracted edges alone.
    pub fn replay(&self, graph: &Graph) -> CutResult {
        let mut ds = DisjointSet::new(graph.vertex_count());
        for &e in &self.contracted {
            let edge = graph.edge(e);
            ds.union(edge.u, edge.v);
        }
        let assignment = label_clusters(&ds.roots(), &self.anchors);
        CutResult::from_assignment(graph, assignment)
    }

    /// Contracted edge indices, sorted.
    pub fn forest(&self) -> Vec<usize> {
        let mut f = self.contracted.clone();
        f.sort_unstable();
        f
    }
}

/// Labels the clusters given by per-vertex roots. Anchored clusters take
/// their anchor's label (the smallest if several); the rest take the
/// smallest unused labels in order of their first vertex.
pub(crate) fn label_clusters(roots: &[usize], anchors: &[(usize, u32)]) -> Vec<u32> {
    let n = roots.len();
    let mut by_root = vec![0u32; n];
    let mut used = std::collections::BTreeSet::new();
    for &(v, l) in anchors {
        let slot = &mut by_root[roots[v]];
        if *slot == 0 || l < *slot {
            *slot = l;
        }
    }
    for &l in by_root.iter().filter(|&&l| l != 0) {
        used.insert(l);
    }
    let mut next = 1u32;
    roots
        .iter()
        .map(|&r| {
            if by_root[r] == 0 {
                while used.contains(&next) {
                    next += 1;
                }
                by_root[r] = next;
                used.insert(next);
            }
            by_root[r]
        })
        .collect()
}

fn edge_weights(graph: &Graph) -> Vec<f64> {
    graph.edges().iter().map(|e| e.weight).collect()
}

/// Karger's contraction algorithm. The side containing vertex 0 gets
/// label 1.
pub fn karger_run(graph: &Graph, rng_seed: u64) -> Result<ContractionTrace> {
    karger_run_with(graph, &mut rng_from_seed(rng_seed)).map(|(contracted, cut)| ContractionTrace {
        contracted,
        cut,
        rng_seed,
        anchors: Vec::new(),
    })
}

fn karger_run_with<R: Rng + ?Sized>(graph: &Graph, rng: &mut R) -> Result<(Vec<usize>, CutResult)> {
    if graph.total_weight() <= 0.0 {
        return Err(Error::Degenerate("total edge weight is zero".into()));
    }
    let order = weighted_permutation_with(&edge_weights(graph), rng);
    let mut ds = DisjointSet::new(graph.vertex_count());
    let mut contracted = Vec::with_capacity(graph.vertex_count().saturating_sub(2));
    for e in order {
        if ds.cluster_count() <= 2 {
            break;
        }
        let edge = graph.edge(e);
        let (ru, rv) = (ds.find(edge.u), ds.find(edge.v));
        if ru == rv {
            continue;
        }
        if edge.weight == 0.0 {
            return Err(Error::Degenerate(format!(
                "only zero-weight edges remain with {} clusters",
                ds.cluster_count()
            )));
        }
        ds.union_roots(ru, rv);
        contracted.push(e);
    }
    let assignment = label_clusters(&ds.roots(), &[]);
    Ok((contracted, CutResult::from_assignment(graph, assignment)))
}

/// General contraction: contract a live edge with probability proportional
/// to `score` until two clusters remain.
///
/// The side containing `s` (or vertex 0 without `s`) gets label 1.
pub fn general_contraction_run(
    graph: &Graph,
    score: &dyn ScoreFunction,
    s: Option<usize>,
    t: Option<usize>,
    rng_seed: u64,
) -> Result<ContractionTrace> {
    let n = graph.vertex_count();
    for v in [s, t].into_iter().flatten() {
        if v >= n {
            return Err(Error::InvalidArgument(format!(
                "terminal {v} out of range for {n} vertices"
            )));
        }
    }
    if s.is_some() && s == t {
        return Err(Error::InvalidArgument("s and t must differ".into()));
    }
    let mut rng = rng_from_seed(rng_seed);
    let mut state = ContractedGraph::new(graph);
    let mut terminals = Terminals { s, t };
    let mut contracted = Vec::with_capacity(n.saturating_sub(2));
    let mut scores = Vec::new();

    while state.cluster_count() > 2 {
        scores.clear();
        for edge in state.edges() {
            let value = score.score(edge, &state, terminals);
            if !(value.is_finite() && value >= 0.0) {
                return Err(Error::InvalidScore {
                    name: score.name().to_string(),
                    value,
                });
            }
            scores.push(value);
        }
        let chosen = sample_proportional(&scores, &mut rng).ok_or_else(|| {
            Error::Degenerate(format!(
                "score `{}` is zero on every live edge with {} clusters left",
                score.name(),
                state.cluster_count()
            ))
        })?;
        let edge = &state.edges()[chosen];
        let member_weights: Vec<f64> = edge.members.iter().map(|&e| graph.edge(e).weight).collect();
        let member = sample_proportional(&member_weights, &mut rng)
            .unwrap_or_else(|| rng.random_range(0..member_weights.len()));
        contracted.push(edge.members[member]);
        let (a, b) = (edge.a, edge.b);
        let merged = state.contract(chosen);
        for terminal in [&mut terminals.s, &mut terminals.t] {
            if *terminal == Some(a) || *terminal == Some(b) {
                *terminal = Some(merged);
            }
        }
    }

    let anchors: Vec<(usize, u32)> = s.map(|s| (s, 1)).into_iter().chain(t.map(|t| (t, 2))).collect();
    let assignment = label_clusters(state.partition(), &anchors);
    Ok(ContractionTrace {
        contracted,
        cut: CutResult::from_assignment(graph, assignment),
        rng_seed,
        anchors,
    })
}

/// Index drawn with probability proportional to `weights`; `None` when all
/// weights are zero.
fn sample_proportional<R: Rng + ?Sized>(weights: &[f64], rng: &mut R) -> Option<usize> {
    let total: f64 = weights.iter().sum();
    if total <= 0.0 {
        return None;
    }
    let mut target = rng.random::<f64>() * total;
    let mut last_positive = None;
    for (i, &w) in weights.iter().enumerate() {
        if w > 0.0 {
            if target < w {
                return Some(i);
            }
            target -= w;
            last_positive = Some(i);
        }
    }
    last_positive
}

/// Seeded contraction: clusters with different seed labels are never
/// merged, and contraction stops once `k` clusters remain (all labeled).
///
/// Seeds sharing a label start in one cluster. Every vertex receives the
/// label of its final cluster.
pub fn seeded_contraction_run(graph: &Graph, seeds: &SeedMap, rng_seed: u64) -> Result<ContractionTrace> {
    check_seeds(graph, seeds)?;
    let weights = edge_weights(graph);
    let (contracted, assignment) = seeded_run_with(graph, seeds, &weights, &mut rng_from_seed(rng_seed))?;
    Ok(ContractionTrace {
        contracted,
        cut: CutResult::from_assignment(graph, assignment),
        rng_seed,
        anchors: seeds
            .labels()
            .iter()
            .enumerate()
            .filter(|(_, &l)| l != 0)
            .map(|(v, &l)| (v, l))
            .collect(),
    })
}

pub(crate) fn check_seeds(graph: &Graph, seeds: &SeedMap) -> Result<()> {
    seeds.check_len(graph.vertex_count())?;
    if seeds.k() < 2 {
        return Err(Error::InvalidSeeds(format!(
            "need at least 2 labels, got {}",
            seeds.k()
        )));
    }
    Ok(())
}

/// One seeded run on precomputed edge weights; returns contracted edges and
/// the per-vertex labels.
pub(crate) fn seeded_run_with<R: Rng + ?Sized>(
    graph: &Graph,
    seeds: &SeedMap,
    weights: &[f64],
    rng: &mut R,
) -> Result<(Vec<usize>, Vec<u32>)> {
    let k = seeds.k();
    let mut ds = DisjointSet::with_seeds(seeds);
    let mut contracted = Vec::with_capacity(ds.cluster_count() - k);
    if ds.cluster_count() > k {
        let order = weighted_permutation_with(weights, rng);
        for e in order {
            let edge = graph.edge(e);
            let (ru, rv) = (ds.find(edge.u), ds.find(edge.v));
            if ds.union_roots(ru, rv) {
                contracted.push(e);
                if ds.cluster_count() == k {
                    break;
                }
            }
        }
    }
    if ds.cluster_count() != k {
        return Err(Error::Degenerate(format!(
            "{} clusters remain after scanning every edge, expected {k}",
            ds.cluster_count()
        )));
    }
    Ok((contracted, ds.labels()))
}
