//! Fixtures for the criterion benches.

use karger_core::{Graph, SeedMap};

/// Grid sizes for the criterion groups; smaller than the CLI sweep so a
/// full `cargo bench` stays short.
pub const GRID_SIZES: [(usize, usize); 4] = [(64, 64), (64, 128), (128, 128), (128, 256)];

/// Random-intensity grid with two corner seeds.
pub fn grid(width: usize, height: usize) -> (Graph, SeedMap) {
    karger_cli::commands::bench::grid_fixture(width, height, 0).expect("valid grid fixture")
}

pub fn weights(graph: &Graph) -> Vec<f64> {
    graph.edges().iter().map(|e| e.weight).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        for (w, h) in GRID_SIZES {
            let (g, seeds) = grid(w, h);
            assert_eq!(g.vertex_count(), w * h);
            assert_eq!(seeds.k(), 2);
            assert_eq!(weights(&g).len(), g.edge_count());
        }
    }
}
