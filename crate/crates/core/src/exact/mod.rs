//! Brute-force oracles and exact distributions for small graphs.
//!
//! Everything here enumerates exhaustively and refuses inputs above its
//! size guard with [`Error::TooLarge`](crate::Error::TooLarge) instead of
//! truncating.

mod distribution;
mod forests;
mod karger;
mod mincut;

pub use distribution::{
    contraction_distribution, contraction_distribution_by_sequences, gibbs_distribution, ForestDistribution,
    ForestFamily, MAX_ORDERED_EDGES,
};
pub use forests::{
    closure, contracted_state, enumerate_seed_forests, forest_size, remaining_weight, MAX_FOREST_EDGES,
};
pub use karger::{
    exact_cut_distribution, exact_karger_success, probability_of_partition, MAX_EXACT_VERTICES,
};
pub use mincut::{
    brute_force_global_mincut, brute_force_st_mincut, is_alpha_minimal, ncut_cost, values_tie, CutReference,
    MincutResult, MAX_CUT_VERTICES,
};
