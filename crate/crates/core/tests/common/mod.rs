#![allow(dead_code)]

use karger_core::graph::{random_connected_graph, WeightPattern};
use karger_core::rng::rng_from_seed;
use karger_core::{Graph, SeedMap};

pub fn triangle() -> Graph {
    Graph::new(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap()
}

/// s=0, a=1, t=2, b=3 around a unit cycle.
pub fn four_cycle() -> Graph {
    Graph::new(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)]).unwrap()
}

pub fn path_2_1() -> (Graph, SeedMap) {
    (
        Graph::new(3, [(0, 1, 2.0), (1, 2, 1.0)]).unwrap(),
        SeedMap::new(vec![1, 0, 2]).unwrap(),
    )
}

/// Every connected labelled graph on `n` vertices (as edge lists).
pub fn connected_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect::<Vec<_>>()
        })
        .filter(|edges| Graph::new(n, edges.iter().map(|&(u, v)| (u, v, 1.0))).is_ok())
        .collect()
}

/// Seed placements used by the exhaustive suites.
pub fn seed_placements(n: usize) -> Vec<SeedMap> {
    let mut out = Vec::new();
    let mut two = vec![0; n];
    two[0] = 1;
    two[n - 1] = 2;
    out.push(SeedMap::new(two).unwrap());
    if n >= 4 {
        let mut three = vec![0; n];
        three[0] = 1;
        three[1] = 2;
        three[n - 1] = 3;
        out.push(SeedMap::new(three).unwrap());
        let mut shared = vec![0; n];
        shared[0] = 1;
        shared[1] = 1;
        shared[n - 1] = 2;
        out.push(SeedMap::new(shared).unwrap());
    }
    out
}

/// Unit weights and an alternating 2:1 pattern.
pub fn weight_patterns(edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize, f64)>> {
    vec![
        edges.iter().map(|&(u, v)| (u, v, 1.0)).collect(),
        edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (u, v, if i % 2 == 0 { 2.0 } else { 1.0 }))
            .collect(),
    ]
}

/// Random connected graphs with `n` in `min_n..=max_n` and at most
/// `max_edges` edges.
pub fn random_graphs(count: usize, min_n: usize, max_n: usize, max_edges: usize, seed: u64) -> Vec<Graph> {
    use rand::Rng;
    let mut rng = rng_from_seed(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.random_range(min_n..=max_n);
        let pattern = if out.len() % 2 == 0 {
            WeightPattern::Unit
        } else {
            WeightPattern::Uniform { low: 0.2, high: 3.0 }
        };
        let g = random_connected_graph(n, 0.4, pattern, &mut rng).unwrap();
        if g.edge_count() <= max_edges {
            out.push(g);
        }
    }
    out
}

/// One seed per label at the first and last vertex.
pub fn end_seeds(n: usize) -> SeedMap {
    SeedMap::from_pairs(n, [(0, 1), (n - 1, 2)]).unwrap()
}
