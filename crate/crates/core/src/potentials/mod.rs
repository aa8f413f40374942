//! Per-vertex label probabilities and hard labelings.
//!
//! * [`karger_potential`]: frequency with which seeded contraction assigns
//!   each label to each vertex, over many independent runs.
//! * [`random_walker_potential`]: probability that a weight-proportional
//!   random walk from a vertex first hits a seed of each label, from the
//!   grounded Laplacian system.
//! * [`watershed_labeling`]: the labeling induced by a maximum spanning
//!   forest that separates the seeds.

mod solver;

pub use solver::{conjugate_gradient, DenseLaplacian, SparseSpd, DENSE_LIMIT};

use std::fmt::Write as _;

use rand::Rng;
use rayon::prelude::*;

use crate::contraction::{check_seeds, seeded_run_with};
use crate::error::{Error, Result};
use crate::graph::{CutResult, DisjointSet, Graph, SeedMap};
use crate::rng::{derive_seed, rng_from_seed};

/// Default Monte Carlo run count for [`karger_potential`].
pub const DEFAULT_RUNS: usize = 1000;

/// Default relative residual for [`random_walker_potential`].
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PotentialMethod {
    Contraction,
    RandomWalker,
}

impl PotentialMethod {
    pub fn name(self) -> &'static str {
        match self {
            PotentialMethod::Contraction => "contraction",
            PotentialMethod::RandomWalker => "rw",
        }
    }
}

/// Row-stochastic vertex × label matrix. Labels are `1..=k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Potential {
    k: usize,
    probs: Vec<f64>,
    pub method: PotentialMethod,
    /// Number of Monte Carlo runs, for sampled potentials.
    pub runs: Option<usize>,
}

impl Potential {
    pub fn from_rows(rows: Vec<Vec<f64>>, method: PotentialMethod) -> Result<Self> {
        let k = rows.first().map_or(0, Vec::len);
        if k == 0 || rows.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidArgument(
                "potential rows must share a positive width".into(),
            ));
        }
        Ok(Self {
            k,
            probs: rows.into_iter().flatten().collect(),
            method,
            runs: None,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.probs.len() / self.k
    }

    /// Probabilities of vertex `v` for labels `1..=k`.
    pub fn row(&self, v: usize) -> &[f64] {
        &self.probs[v * self.k..(v + 1) * self.k]
    }

    /// Probability that `v` gets `label` (1-based).
    pub fn get(&self, v: usize, label: u32) -> f64 {
        self.row(v)[label as usize - 1]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.probs.chunks_exact(self.k)
    }

    /// Mean of `|p - 1/k|` over the unlabeled vertices and all labels; larger
    /// means more confident. Zero when every vertex is seeded.
    pub fn confidence(&self, seeds: &SeedMap) -> f64 {
        let uniform = 1.0 / self.k as f64;
        let (sum, count) = self.rows().enumerate().filter(|(v, _)| !seeds.is_seed(*v)).fold(
            (0.0, 0usize),
            |(s, c), (_, row)| {
                (
                    s + row.iter().map(|p| (p - uniform).abs()).sum::<f64>(),
                    c + row.len(),
                )
            },
        );
        if count == 0 {
            0.0
        } else {
            sum / count as f64
        }
    }

    /// CSV with header `vertex,p_1,...,p_k`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("vertex");
        for l in 1..=self.k {
            write!(out, ",p_{l}").unwrap();
        }
        out.push('\n');
        for (v, row) in self.rows().enumerate() {
            write!(out, "{v}").unwrap();
            for p in row {
                write!(out, ",{p}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Fraction of seeded contraction runs assigning each label to each vertex.
///
/// Run `i` draws from `derive_seed(rng_seed, i)`, so the result does not
/// depend on how runs are spread over threads.
pub fn karger_potential(graph: &Graph, seeds: &SeedMap, runs: usize, rng_seed: u64) -> Result<Potential> {
    check_seeds(graph, seeds)?;
    if runs == 0 {
        return Err(Error::InvalidArgument("runs must be >= 1".into()));
    }
    let n = graph.vertex_count();
    let k = seeds.k();
    let weights: Vec<f64> = graph.edges().iter().map(|e| e.weight).collect();
    const CHUNK: usize = 32;
    let counts = (0..runs.div_ceil(CHUNK))
        .into_par_iter()
        .map(|chunk| -> Result<Vec<u32>> {
            let mut counts = vec![0u32; n * k];
            for run in chunk * CHUNK..((chunk + 1) * CHUNK).min(runs) {
                let mut rng = rng_from_seed(derive_seed(rng_seed, run as u64));
                let (_, labels) = seeded_run_with(graph, seeds, &weights, &mut rng)?;
                for (v, &l) in labels.iter().enumerate() {
                    counts[v * k + l as usize - 1] += 1;
                }
            }
            Ok(counts)
        })
        .try_reduce(
            || vec![0u32; n * k],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                Ok(a)
            },
        )?;
    Ok(Potential {
        k,
        probs: counts.into_iter().map(|c| f64::from(c) / runs as f64).collect(),
        method: PotentialMethod::Contraction,
        runs: Some(runs),
    })
}

/// Random walker potential from the grounded Laplacian.
///
/// Up to [`DENSE_LIMIT`] unknowns the system is eliminated directly for all
/// labels. Larger systems use conjugate gradients for labels `1..k-1` and
/// set the last label to one minus the others.
pub fn random_walker_potential(graph: &Graph, seeds: &SeedMap, tolerance: f64) -> Result<Potential> {
    check_seeds(graph, seeds)?;
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let n = graph.vertex_count();
    let k = seeds.k();
    let mut unknown_index = vec![usize::MAX; n];
    let unknowns: Vec<usize> = (0..n).filter(|&v| !seeds.is_seed(v)).collect();
    for (i, &v) in unknowns.iter().enumerate() {
        unknown_index[v] = i;
    }

    let mut probs = vec![0.0; n * k];
    for v in 0..n {
        let l = seeds.label(v);
        if l != 0 {
            probs[v * k + l as usize - 1] = 1.0;
        }
    }
    let done = |probs| Potential {
        k,
        probs,
        method: PotentialMethod::RandomWalker,
        runs: None,
    };
    if unknowns.is_empty() {
        return Ok(done(probs));
    }

    if unknowns.len() <= DENSE_LIMIT {
        let mut lap = DenseLaplacian::new(unknowns.len(), k);
        for e in graph.edges() {
            match (seeds.label(e.u), seeds.label(e.v)) {
                (0, 0) => lap.add_coupling(unknown_index[e.u], unknown_index[e.v], e.weight),
                (0, l) => lap.add_grounding(unknown_index[e.u], l as usize - 1, e.weight),
                (l, 0) => lap.add_grounding(unknown_index[e.v], l as usize - 1, e.weight),
                _ => {}
            }
        }
        let x = lap.solve()?;
        for (i, &v) in unknowns.iter().enumerate() {
            probs[v * k..(v + 1) * k].copy_from_slice(&x[i * k..(i + 1) * k]);
        }
        return Ok(done(probs));
    }

    let mut rhs = vec![vec![0.0; unknowns.len()]; k - 1];
    let rows = unknowns
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut row = vec![(i, graph.degree(v))];
            for &(u, e) in graph.neighbors(v) {
                let w = graph.edge(e).weight;
                match seeds.label(u) {
                    0 => row.push((unknown_index[u], -w)),
                    l if (l as usize) < k => rhs[l as usize - 1][i] += w,
                    _ => {}
                }
            }
            row
        })
        .collect();
    let laplacian = SparseSpd::from_rows(rows);
    let solutions: Vec<Vec<f64>> = {
        use rayon::prelude::*;
        rhs.par_iter()
            .map(|b| conjugate_gradient(&laplacian, b, tolerance, 10 * n))
            .collect::<Result<_>>()?
    };

    for (i, &v) in unknowns.iter().enumerate() {
        let row = &mut probs[v * k..(v + 1) * k];
        let mut rest = 1.0;
        for (l, x) in solutions.iter().enumerate() {
            let p = x[i].clamp(0.0, 1.0);
            row[l] = p;
            rest -= p;
        }
        row[k - 1] = rest.clamp(0.0, 1.0);
    }
    Ok(done(probs))
}

/// Largest deviation from the weighted neighbor average over unlabeled
/// vertices and labels.
pub fn harmonic_residual(graph: &Graph, seeds: &SeedMap, potential: &Potential) -> f64 {
    let mut worst: f64 = 0.0;
    for v in (0..graph.vertex_count()).filter(|&v| !seeds.is_seed(v)) {
        let degree = graph.degree(v);
        for l in 1..=potential.k() as u32 {
            let avg: f64 = graph
                .neighbors(v)
                .iter()
                .map(|&(u, e)| graph.edge(e).weight * potential.get(u, l))
                .sum::<f64>()
                / degree;
            worst = worst.max((potential.get(v, l) - avg).abs());
        }
    }
    worst
}

/// Seeded Kruskal: edges by decreasing weight (ties in random order), merged
/// unless both clusters already carry different labels.
pub fn watershed_labeling(graph: &Graph, seeds: &SeedMap, rng_seed: u64) -> Result<CutResult> {
    check_seeds(graph, seeds)?;
    let mut rng = rng_from_seed(rng_seed);
    let mut order: Vec<(f64, u64, usize)> = graph
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| (e.weight, rng.random::<u64>(), i))
        .collect();
    order.sort_unstable_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut ds = DisjointSet::with_seeds(seeds);
    for (_, _, i) in order {
        let e = graph.edge(i);
        ds.union(e.u, e.v);
    }
    Ok(CutResult::from_assignment(graph, ds.labels()))
}

/// Most probable label per vertex, exact ties broken at random; seeds keep
/// their label.
pub fn argmax_labeling(
    graph: &Graph,
    potential: &Potential,
    seeds: &SeedMap,
    rng_seed: u64,
) -> Result<CutResult> {
    let n = graph.vertex_count();
    if potential.vertex_count() != n {
        return Err(Error::InvalidArgument(format!(
            "potential covers {} vertices, graph has {n}",
            potential.vertex_count()
        )));
    }
    seeds.check_len(n)?;
    let mut rng = rng_from_seed(rng_seed);
    let assignment = potential
        .rows()
        .enumerate()
        .map(|(v, row)| {
            if seeds.is_seed(v) {
                return seeds.label(v);
            }
            let best = row.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let mut chosen = 0;
            let mut ties = 0;
            for (l, &p) in row.iter().enumerate() {
                if p == best {
                    ties += 1;
                    if rng.random_range(0..ties) == 0 {
                        chosen = l;
                    }
                }
            }
            chosen as u32 + 1
        })
        .collect();
    Ok(CutResult::from_assignment(graph, assignment))
}
