//! Spanning forests that separate seeds, and the contraction closure.
//!
//! Seeds sharing a label are treated as one node: a forest in `F_s` has one
//! tree per label, each tree holding all seeds of its label and none of
//! another. Edges joining two seeds never belong to such a forest.

use crate::error::{Error, Result};
use crate::graph::{DisjointSet, Graph, SeedMap};

/// Edge limit for subset enumeration.
pub const MAX_FOREST_EDGES: usize = 16;

/// Number of edges in every forest of `F_s`.
pub fn forest_size(graph: &Graph, seeds: &SeedMap) -> usize {
    graph.vertex_count() - seeds.seeded_count()
}

/// All forests of `F_s` as sorted edge index lists, in lexicographic order.
pub fn enumerate_seed_forests(graph: &Graph, seeds: &SeedMap) -> Result<Vec<Vec<usize>>> {
    seeds.check_len(graph.vertex_count())?;
    if graph.edge_count() > MAX_FOREST_EDGES {
        return Err(Error::TooLarge {
            what: "edge count",
            actual: graph.edge_count(),
            limit: MAX_FOREST_EDGES,
        });
    }
    let candidates: Vec<usize> = (0..graph.edge_count())
        .filter(|&e| {
            let edge = graph.edge(e);
            !(seeds.is_seed(edge.u) && seeds.is_seed(edge.v))
        })
        .collect();
    let size = forest_size(graph, seeds);
    let mut forests = Vec::new();
    let mut chosen = Vec::with_capacity(size);
    combinations(&candidates, size, 0, &mut chosen, &mut |subset| {
        let mut ds = DisjointSet::with_seeds(seeds);
        if subset.iter().all(|&e| {
            let edge = graph.edge(e);
            ds.union(edge.u, edge.v)
        }) {
            forests.push(subset.to_vec());
        }
    });
    Ok(forests)
}

fn combinations(
    items: &[usize],
    size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == size {
        visit(chosen);
        return;
    }
    let needed = size - chosen.len();
    if items.len() < start + needed {
        return;
    }
    for i in start..=items.len() - needed {
        chosen.push(items[i]);
        combinations(items, size, i + 1, chosen, visit);
        chosen.pop();
    }
}

/// Union-find state after contracting `edges` from the seeded start.
/// Returns `None` if some edge closes a cycle or joins two labels.
pub fn contracted_state(graph: &Graph, seeds: &SeedMap, edges: &[usize]) -> Option<DisjointSet> {
    let mut ds = DisjointSet::with_seeds(seeds);
    for &e in edges {
        let edge = graph.edge(e);
        if !ds.union(edge.u, edge.v) {
            return None;
        }
    }
    Some(ds)
}

/// Membership mask of the closure of `edges`: the edges themselves plus
/// every edge that would close a cycle with them or complete a path
/// between seeds of different labels.
///
/// Panics if `edges` is not itself contractible.
pub fn closure(graph: &Graph, seeds: &SeedMap, edges: &[usize]) -> Vec<bool> {
    let mut ds = contracted_state(graph, seeds, edges).expect("edge set is not contractible");
    let mut inside = vec![false; graph.edge_count()];
    for &e in edges {
        inside[e] = true;
    }
    for (i, e) in graph.edges().iter().enumerate() {
        let (ru, rv) = (ds.find(e.u), ds.find(e.v));
        let (lu, lv) = (ds.root_label(ru), ds.root_label(rv));
        if ru == rv || (lu != 0 && lv != 0 && lu != lv) {
            inside[i] = true;
        }
    }
    inside
}

/// Total weight of the edges outside the closure of `edges`, i.e. what is
/// still available for contraction.
pub fn remaining_weight(graph: &Graph, seeds: &SeedMap, edges: &[usize]) -> f64 {
    closure(graph, seeds, edges)
        .iter()
        .zip(graph.edges())
        .filter(|(&c, _)| !c)
        .map(|(_, e)| e.weight)
        .sum()
}
