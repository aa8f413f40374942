use anyhow::{bail, Result};
use karger_core::contraction::StScore;
use karger_core::exact::{exact_karger_success, MAX_EXACT_VERTICES};
use karger_core::general_contraction_run;
use karger_core::graph::make_star_counterexample;
use karger_core::rng::derive_seed;
use karger_core::stats::binomial_std_error;
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq)]
pub struct CounterexampleReport {
    pub n: usize,
    pub trials: u64,
    pub successes: u64,
    pub analytic: f64,
    /// Exact recursion, for small stars only.
    pub exact: Option<f64>,
    pub std_error: f64,
}

impl CounterexampleReport {
    pub fn frequency(&self) -> f64 {
        self.successes as f64 / self.trials as f64
    }

    /// Frequency within three binomial standard errors of the analytic value.
    pub fn passed(&self) -> bool {
        (self.frequency() - self.analytic).abs() <= 3.0 * self.std_error
    }

    pub fn render(&self) -> String {
        let exact = self.exact.map_or("n/a".to_string(), |p| format!("{p:.12}"));
        format!(
            "star n={} trials={}\nfrequency  {:.6} ({} successes)\nanalytic   {:.6} = (2/3)^{}\nexact      {exact}\n3-sigma    {:.6}\nverdict    {}\n",
            self.n,
            self.trials,
            self.frequency(),
            self.successes,
            self.analytic,
            self.n - 2,
            3.0 * self.std_error,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Runs s-t contraction on the star graph `trials` times and counts how
/// often it returns the minimum s-t cut, which isolates `s`.
pub fn run_counterexample(n: usize, trials: u64, rng_seed: u64) -> Result<CounterexampleReport> {
    if n < 3 {
        bail!("star needs n >= 3, got {n}");
    }
    if trials == 0 {
        bail!("trials must be >= 1");
    }
    let star = make_star_counterexample(n)?;
    let (s, t) = (star.s, star.t);
    let successes = (0..trials)
        .into_par_iter()
        .map(|i| -> Result<u64> {
            let run =
                general_contraction_run(&star.graph, &StScore, Some(s), Some(t), derive_seed(rng_seed, i))?;
            let a = &run.cut.assignment;
            Ok((0..n).all(|v| v == s || a[v] != a[s]) as u64)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    let analytic = (2.0f64 / 3.0).powi(n as i32 - 2);
    let exact = if n <= MAX_EXACT_VERTICES {
        Some(exact_karger_success(&star.graph, Some(s), Some(t), &StScore)?)
    } else {
        None
    };
    Ok(CounterexampleReport {
        n,
        trials,
        successes,
        analytic,
        exact,
        std_error: binomial_std_error(analytic, trials),
    })
}
