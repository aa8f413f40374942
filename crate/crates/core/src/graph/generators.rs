use rand::seq::SliceRandom;
use rand::Rng;

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

/// 4-connected grid with weights `exp(-beta * (g_i + g_j)^2)`.
///
/// `intensity` is row-major (`y * width + x`) and must already be scaled
/// into `[0, 1]`. Vertex ids follow the same layout.
pub fn make_grid_graph(width: usize, height: usize, intensity: &[f64], beta: f64) -> Result<Graph> {
    if width == 0 || height == 0 || width * height < 2 {
        return Err(Error::InvalidArgument(format!(
            "grid {width}x{height} has fewer than 2 pixels"
        )));
    }
    if intensity.len() != width * height {
        return Err(Error::InvalidArgument(format!(
            "intensity map has {} values, grid needs {}",
            intensity.len(),
            width * height
        )));
    }
    if let Some((i, g)) = intensity
        .iter()
        .enumerate()
        .find(|(_, g)| !(0.0..=1.0).contains(*g))
    {
        return Err(Error::InvalidArgument(format!(
            "intensity {g} at pixel {i} outside [0, 1]"
        )));
    }
    check_beta(beta)?;
    let weight = |a: usize, b: usize| {
        let s = intensity[a] + intensity[b];
        (-beta * s * s).exp()
    };
    let mut edges = Vec::with_capacity(2 * width * height);
    for y in 0..height {
        for x in 0..width {
            let v = y * width + x;
            if x + 1 < width {
                edges.push((v, v + 1, weight(v, v + 1)));
            }
            if y + 1 < height {
                edges.push((v, v + width, weight(v, v + width)));
            }
        }
    }
    Graph::new(width * height, edges)
}

fn check_beta(beta: f64) -> Result<()> {
    if !(beta >= 0.0 && beta.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "beta must be finite and >= 0, got {beta}"
        )));
    }
    Ok(())
}

/// Pairwise euclidean distances between rows.
pub fn euclidean_distances(points: &[Vec<f64>]) -> Vec<Vec<f64>> {
    points
        .iter()
        .map(|p| {
            points
                .iter()
                .map(|q| {
                    p.iter()
                        .zip(q)
                        .map(|(a, b)| (a - b) * (a - b))
                        .sum::<f64>()
                        .sqrt()
                })
                .collect()
        })
        .collect()
}

/// Symmetrized k-nearest-neighbor graph with weights
/// `exp(-beta * d_ij^2 / a^2)`, `a` the largest retained distance.
///
/// Distance ties are broken by the lower index.
pub fn make_knn_graph(distances: &[Vec<f64>], knn: usize, beta: f64) -> Result<Graph> {
    let n = distances.len();
    if knn == 0 {
        return Err(Error::InvalidArgument("knn must be >= 1".into()));
    }
    if knn >= n {
        return Err(Error::InvalidArgument(format!(
            "knn = {knn} must be smaller than the number of points ({n})"
        )));
    }
    check_beta(beta)?;
    for (i, row) in distances.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidArgument(format!(
                "distance row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        for (j, &d) in row.iter().enumerate() {
            if !d.is_finite() || d < 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "distance ({i}, {j}) = {d} is not a finite non-negative number"
                )));
            }
            if d != distances[j][i] {
                return Err(Error::InvalidArgument(format!(
                    "distance table is not symmetric at ({i}, {j})"
                )));
            }
        }
    }

    let mut pairs = std::collections::BTreeSet::new();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for (i, row) in distances.iter().enumerate() {
        order.clear();
        order.extend((0..n).filter(|&j| j != i));
        order.sort_by(|&a, &b| row[a].total_cmp(&row[b]).then(a.cmp(&b)));
        for &j in &order[..knn] {
            pairs.insert((i.min(j), i.max(j)));
        }
    }
    let a = pairs
        .iter()
        .map(|&(i, j)| distances[i][j])
        .fold(0.0_f64, f64::max);
    let edges = pairs.into_iter().map(|(i, j)| {
        let d = distances[i][j];
        let ratio = if a > 0.0 { d / a } else { 0.0 };
        (i, j, (-beta * ratio * ratio).exp())
    });
    Graph::new(n, edges.collect::<Vec<_>>())
}

/// Graph on which s-t contraction rarely finds the s-t mincut: every
/// middle vertex hangs off `s` by a thin edge (weight 1) and off `t` by a
/// thick edge (weight 2).
#[derive(Debug, Clone)]
pub struct StarGraph {
    pub graph: Graph,
    pub s: usize,
    pub t: usize,
}

/// `s = 0`, `t = 1`, middle vertices `2..n`.
pub fn make_star_counterexample(n: usize) -> Result<StarGraph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "star counterexample needs n >= 3, got {n}"
        )));
    }
    let (s, t) = (0, 1);
    let edges = (2..n).flat_map(|v| [(s, v, 1.0), (v, t, 2.0)]);
    Ok(StarGraph {
        graph: Graph::new(n, edges.collect::<Vec<_>>())?,
        s,
        t,
    })
}

/// Unit-weight complete graph.
pub fn make_complete_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "complete graph needs n >= 3, got {n}"
        )));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v, 1.0)));
    Graph::new(n, edges.collect::<Vec<_>>())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightPattern {
    Unit,
    /// Uniform on `[low, high)`.
    Uniform {
        low: f64,
        high: f64,
    },
    /// Uniform integer in `1..=max`, which makes ties likely.
    Integer {
        max: u32,
    },
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// independently with probability `extra_edge_probability`.
pub fn random_connected_graph<R: Rng + ?Sized>(
    n: usize,
    extra_edge_probability: f64,
    pattern: WeightPattern,
    rng: &mut R,
) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need n >= 2, got {n}")));
    }
    let draw = |rng: &mut R| match pattern {
        WeightPattern::Unit => 1.0,
        WeightPattern::Uniform { low, high } => rng.random_range(low..high),
        WeightPattern::Integer { max } => f64::from(rng.random_range(1..=max)),
    };
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut builder = GraphBuilder::new(n);
    let mut tree = std::collections::HashSet::new();
    for i in 1..n {
        let parent = perm[rng.random_range(0..i)];
        let (a, b) = (perm[i].min(parent), perm[i].max(parent));
        tree.insert((a, b));
        let w = draw(rng);
        builder.add_edge(a, b, w).map_err(Error::InvalidGraph)?;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !tree.contains(&(u, v)) && rng.random_bool(extra_edge_probability) {
                let w = draw(rng);
                builder.add_edge(u, v, w).map_err(Error::InvalidGraph)?;
            }
        }
    }
    builder.build()
}
