//! Small statistical helpers for Monte Carlo checks.

use statrs::distribution::{ChiSquared, ContinuousCDF};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquareTest {
    pub statistic: f64,
    pub degrees_of_freedom: usize,
    pub p_value: f64,
}

impl ChiSquareTest {
    /// Whether the null hypothesis survives at significance `alpha`.
    pub fn passes(&self, alpha: f64) -> bool {
        self.p_value >= alpha
    }
}

/// Pearson goodness-of-fit of observed counts against expected
/// probabilities (normalized internally).
///
/// Bins with expected count below 5 are pooled into one bin. Observations
/// in a bin of zero expected probability yield a p-value of 0.
pub fn chi_square_gof(observed: &[u64], expected: &[f64]) -> ChiSquareTest {
    assert_eq!(observed.len(), expected.len(), "bin count mismatch");
    let total: u64 = observed.iter().sum();
    let norm: f64 = expected.iter().sum();
    assert!(norm > 0.0, "expected probabilities sum to zero");
    let n = total as f64;

    let mut bins: Vec<(f64, f64)> = Vec::new();
    let (mut pooled_obs, mut pooled_exp) = (0.0, 0.0);
    for (&o, &p) in observed.iter().zip(expected) {
        let e = p / norm * n;
        if e == 0.0 {
            if o > 0 {
                return ChiSquareTest {
                    statistic: f64::INFINITY,
                    degrees_of_freedom: 0,
                    p_value: 0.0,
                };
            }
            continue;
        }
        if e < 5.0 {
            pooled_obs += o as f64;
            pooled_exp += e;
        } else {
            bins.push((o as f64, e));
        }
    }
    if pooled_exp > 0.0 {
        if pooled_exp >= 5.0 || bins.is_empty() {
            bins.push((pooled_obs, pooled_exp));
        } else {
            let smallest = bins.iter_mut().min_by(|a, b| a.1.total_cmp(&b.1)).unwrap();
            smallest.0 += pooled_obs;
            smallest.1 += pooled_exp;
        }
    }
    let statistic: f64 = bins.iter().map(|&(o, e)| (o - e) * (o - e) / e).sum();
    let dof = bins.len().saturating_sub(1);
    let p_value = if dof == 0 {
        1.0
    } else {
        ChiSquared::new(dof as f64).unwrap().sf(statistic)
    };
    ChiSquareTest {
        statistic,
        degrees_of_freedom: dof,
        p_value,
    }
}

/// Standard error of a frequency estimate of `p` from `trials` draws.
pub fn binomial_std_error(p: f64, trials: u64) -> f64 {
    (p * (1.0 - p) / trials as f64).sqrt()
}

/// Whether `successes / trials` lies within `sigmas` binomial standard
/// errors of `p`.
pub fn within_binomial_sigmas(successes: u64, trials: u64, p: f64, sigmas: f64) -> bool {
    let freq = successes as f64 / trials as f64;
    (freq - p).abs() <= sigmas * binomial_std_error(p, trials)
}
