use std::collections::HashMap;

use crate::graph::Graph;

/// An edge of a contracted graph: all original edges between two clusters,
/// merged by weight addition.
#[derive(Debug, Clone, PartialEq)]
pub struct LiveEdge {
    /// Cluster ids, `a < b`.
    pub a: usize,
    pub b: usize,
    pub weight: f64,
    /// Indices of the original edges merged into this one.
    pub members: Vec<usize>,
}

impl LiveEdge {
    pub fn joins(&self, x: usize, y: usize) -> bool {
        (self.a == x && self.b == y) || (self.a == y && self.b == x)
    }
}

/// A graph after some contractions. Clusters are identified by their
/// smallest original vertex; there are no self-loops and at most one live
/// edge per pair of clusters.
#[derive(Debug, Clone)]
pub struct ContractedGraph<'g> {
    graph: &'g Graph,
    cluster_of: Vec<usize>,
    clusters: usize,
    edges: Vec<LiveEdge>,
    index: HashMap<(usize, usize), usize>,
}

impl<'g> ContractedGraph<'g> {
    /// The uncontracted graph.
    pub fn new(graph: &'g Graph) -> Self {
        let identity: Vec<usize> = (0..graph.vertex_count()).collect();
        Self::from_partition(graph, &identity)
    }

    /// The contraction of every block of `block_of` (arbitrary block ids)
    /// into a single vertex.
    pub fn from_partition(graph: &'g Graph, block_of: &[usize]) -> Self {
        assert_eq!(block_of.len(), graph.vertex_count());
        let mut smallest: HashMap<usize, usize> = HashMap::new();
        for (v, &b) in block_of.iter().enumerate() {
            smallest.entry(b).or_insert(v);
        }
        let cluster_of = block_of.iter().map(|b| smallest[b]).collect();
        let mut state = Self {
            graph,
            cluster_of,
            clusters: smallest.len(),
            edges: Vec::new(),
            index: HashMap::new(),
        };
        state.rebuild_edges();
        state
    }

    fn rebuild_edges(&mut self) {
        let mut edges: Vec<LiveEdge> = Vec::with_capacity(self.edges.len());
        let mut index = HashMap::with_capacity(self.index.len());
        for (i, e) in self.graph.edges().iter().enumerate() {
            let (x, y) = (self.cluster_of[e.u], self.cluster_of[e.v]);
            if x == y {
                continue;
            }
            let key = (x.min(y), x.max(y));
            match index.get(&key) {
                Some(&j) => {
                    let live: &mut LiveEdge = &mut edges[j];
                    live.weight += e.weight;
                    live.members.push(i);
                }
                None => {
                    index.insert(key, edges.len());
                    edges.push(LiveEdge {
                        a: key.0,
                        b: key.1,
                        weight: e.weight,
                        members: vec![i],
                    });
                }
            }
        }
        self.edges = edges;
        self.index = index;
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn cluster_count(&self) -> usize {
        self.clusters
    }

    #[inline]
    pub fn cluster_of(&self, v: usize) -> usize {
        self.cluster_of[v]
    }

    /// Per-vertex cluster id.
    pub fn partition(&self) -> &[usize] {
        &self.cluster_of
    }

    pub fn edges(&self) -> &[LiveEdge] {
        &self.edges
    }

    /// Entry of the weighted adjacency matrix between two clusters.
    pub fn weight_between(&self, x: usize, y: usize) -> f64 {
        self.index
            .get(&(x.min(y), x.max(y)))
            .map_or(0.0, |&i| self.edges[i].weight)
    }

    pub fn live_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// Contracts live edge `index` and returns the id of the merged cluster.
    pub fn contract(&mut self, index: usize) -> usize {
        let (keep, gone) = (self.edges[index].a, self.edges[index].b);
        for c in &mut self.cluster_of {
            if *c == gone {
                *c = keep;
            }
        }
        self.clusters -= 1;
        self.rebuild_edges();
        keep
    }
}
