//! Undirected weighted graphs, seed maps, union-find and graph generators.
//!
//! A [`Graph`] is immutable once built. Construction validates indices and
//! weights, merges parallel edges by adding their weights and checks that
//! the graph is connected, so everything downstream may assume those
//! properties.

mod generators;
mod io;
mod seeds;
mod union_find;

pub use generators::{
    euclidean_distances, make_complete_graph, make_grid_graph, make_knn_graph, make_star_counterexample,
    random_connected_graph, StarGraph, WeightPattern,
};
pub use io::{load_graph, parse_seeds, write_graph};
pub use seeds::SeedMap;
pub use union_find::DisjointSet;

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

impl Edge {
    /// The endpoint opposite to `x`.
    #[inline]
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    /// Per vertex: `(neighbor, edge index)`.
    adjacency: Vec<Vec<(usize, usize)>>,
    total_weight: f64,
}

impl Graph {
    /// Builds a validated, connected graph on `n` vertices.
    ///
    /// Parallel input edges are merged into the first occurrence by adding
    /// their weights. Self-loops, out-of-range endpoints and negative or
    /// non-finite weights are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut builder = GraphBuilder::new(n);
        for (i, (u, v, w)) in edges.into_iter().enumerate() {
            builder
                .add_edge(u, v, w)
                .map_err(|e| Error::InvalidGraph(format!("edge #{i}: {e}")))?;
        }
        builder.build()
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, index: usize) -> &Edge {
        &self.edges[index]
    }

    /// `(neighbor, edge index)` pairs of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn total_weight(&self) -> f64 {
        self.total_weight
    }

    /// Weighted degree, the sum of weights of edges incident to `v`.
    pub fn degree(&self, v: usize) -> f64 {
        self.adjacency[v].iter().map(|&(_, e)| self.edges[e].weight).sum()
    }

    /// Weight of the edge between `u` and `v`, zero when absent.
    pub fn weight_between(&self, u: usize, v: usize) -> f64 {
        let (a, b) = if self.adjacency[u].len() <= self.adjacency[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[a]
            .iter()
            .find(|&&(x, _)| x == b)
            .map_or(0.0, |&(_, e)| self.edges[e].weight)
    }

    /// Total weight of edges whose endpoints carry different labels.
    pub fn cut_weight(&self, assignment: &[u32]) -> f64 {
        assert_eq!(assignment.len(), self.n, "assignment length mismatch");
        self.edges
            .iter()
            .filter(|e| assignment[e.u] != assignment[e.v])
            .map(|e| e.weight)
            .sum()
    }

    /// Indices of edges whose endpoints carry different labels.
    pub fn cut_set(&self, assignment: &[u32]) -> Vec<usize> {
        assert_eq!(assignment.len(), self.n, "assignment length mismatch");
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| assignment[e.u] != assignment[e.v])
            .map(|(i, _)| i)
            .collect()
    }

    /// A copy with every weight mapped through `f`.
    pub fn map_weights(&self, mut f: impl FnMut(usize, &Edge) -> f64) -> Result<Graph> {
        Graph::new(
            self.n,
            self.edges
                .iter()
                .enumerate()
                .map(|(i, e)| (e.u, e.v, f(i, e)))
                .collect::<Vec<_>>(),
        )
    }
}

/// Incremental construction with parallel-edge merging.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<Edge>,
    index: HashMap<(usize, usize), usize>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Adds `w` to the edge `{u, v}`, creating it if needed.
    pub fn add_edge(&mut self, u: usize, v: usize, w: f64) -> std::result::Result<(), String> {
        if u >= self.n || v >= self.n {
            return Err(format!(
                "endpoint out of range: ({u}, {v}) with {} vertices",
                self.n
            ));
        }
        if u == v {
            return Err(format!("self-loop at vertex {u}"));
        }
        if !w.is_finite() {
            return Err(format!("non-finite weight {w}"));
        }
        if w < 0.0 {
            return Err(format!("negative weight {w}"));
        }
        let key = (u.min(v), u.max(v));
        match self.index.get(&key) {
            Some(&i) => self.edges[i].weight += w,
            None => {
                self.index.insert(key, self.edges.len());
                self.edges.push(Edge { u, v, weight: w });
            }
        }
        Ok(())
    }

    pub fn build(self) -> Result<Graph> {
        let n = self.n;
        if n < 2 {
            return Err(Error::InvalidGraph(format!("need at least 2 vertices, got {n}")));
        }
        let mut adjacency = vec![Vec::new(); n];
        for (i, e) in self.edges.iter().enumerate() {
            adjacency[e.u].push((e.v, i));
            adjacency[e.v].push((e.u, i));
        }
        if let Some(unreached) = first_unreached(&adjacency) {
            return Err(Error::Disconnected { unreached });
        }
        let total_weight = self.edges.iter().map(|e| e.weight).sum();
        Ok(Graph {
            n,
            edges: self.edges,
            adjacency,
            total_weight,
        })
    }
}

fn first_unreached(adjacency: &[Vec<(usize, usize)>]) -> Option<usize> {
    let mut seen = vec![false; adjacency.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &(y, _) in &adjacency[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().position(|&s| !s)
}

/// Per-vertex hard labeling in `1..=k` with the weight of the induced cut.
#[derive(Debug, Clone, PartialEq)]
pub struct CutResult {
    pub assignment: Vec<u32>,
    pub cut_weight: f64,
}

impl CutResult {
    pub fn from_assignment(graph: &Graph, assignment: Vec<u32>) -> Self {
        let cut_weight = graph.cut_weight(&assignment);
        Self {
            assignment,
            cut_weight,
        }
    }

    /// Whether both labelings induce the same partition of the vertices,
    /// ignoring the label names.
    pub fn same_partition(&self, other: &CutResult) -> bool {
        same_partition(&self.assignment, &other.assignment)
    }
}

/// Partition equality of two labelings up to renaming of labels.
pub fn same_partition(a: &[u32], b: &[u32]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut forward = HashMap::new();
    let mut backward = HashMap::new();
    a.iter()
        .zip(b)
        .all(|(&x, &y)| *forward.entry(x).or_insert(y) == y && *backward.entry(y).or_insert(x) == x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_edges_merge_by_addition() {
        let g = Graph::new(3, [(0, 1, 1.0), (1, 2, 1.0), (1, 0, 2.0)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.weight_between(0, 1), 3.0);
        assert_eq!(g.total_weight(), 4.0);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::new(2, [(0, 0, 1.0)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::new(2, [(0, 1, -1.0)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::new(2, [(0, 2, 1.0)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::new(2, [(0, 1, f64::NAN)]),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn rejects_disconnected() {
        assert_eq!(
            Graph::new(4, [(0, 1, 1.0), (2, 3, 1.0)]),
            Err(Error::Disconnected { unreached: 2 })
        );
    }

    #[test]
    fn cut_weight_and_cut_set() {
        let g = Graph::new(3, [(0, 1, 1.0), (1, 2, 2.0), (0, 2, 4.0)]).unwrap();
        assert_eq!(g.cut_weight(&[1, 1, 2]), 6.0);
        assert_eq!(g.cut_set(&[1, 1, 2]), vec![1, 2]);
        assert_eq!(g.cut_weight(&[1, 1, 1]), 0.0);
    }

    #[test]
    fn partition_equality_ignores_names() {
        assert!(same_partition(&[1, 1, 2], &[2, 2, 1]));
        assert!(!same_partition(&[1, 1, 2], &[1, 2, 2]));
        assert!(!same_partition(&[1, 2, 3], &[1, 1, 2]));
    }
}
