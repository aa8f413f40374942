use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::Exp1;

use crate::error::{Error, Result};
use crate::rng::rng_from_seed;

/// Random order in which each next element is drawn from the remaining ones
/// with probability proportional to its weight.
///
/// Realized with exponential clocks: element `i` fires at `E_i / w_i` with
/// `E_i ~ Exp(1)` and the order is by firing time. Zero-weight elements
/// never fire and are appended in uniformly random order.
pub fn weighted_permutation(weights: &[f64], rng_seed: u64) -> Result<Vec<usize>> {
    if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w >= 0.0)) {
        return Err(Error::InvalidArgument(format!(
            "weights must be finite and non-negative, got {w}"
        )));
    }
    if !weights.iter().any(|&w| w > 0.0) {
        return Err(Error::InvalidArgument("all weights are zero".into()));
    }
    Ok(weighted_permutation_with(weights, &mut rng_from_seed(rng_seed)))
}

/// Same as [`weighted_permutation`] on a caller-provided generator; an
/// all-zero input yields a uniform permutation.
pub(crate) fn weighted_permutation_with<R: Rng + ?Sized>(weights: &[f64], rng: &mut R) -> Vec<usize> {
    let mut clocks: Vec<(f64, u32)> = Vec::with_capacity(weights.len());
    let mut silent: Vec<usize> = Vec::new();
    for (i, &w) in weights.iter().enumerate() {
        if w > 0.0 {
            let e: f64 = rng.sample(Exp1);
            clocks.push((e / w, i as u32));
        } else {
            silent.push(i);
        }
    }
    clocks.sort_unstable_by(|a, b| a.0.total_cmp(&b.0));
    silent.shuffle(rng);
    clocks
        .into_iter()
        .map(|(_, i)| i as usize)
        .chain(silent)
        .collect()
}
