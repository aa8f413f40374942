//! Grounded-Laplacian solves for the random walker.

use crate::error::{Error, Result};

/// Unknown count up to which the system is eliminated densely.
pub const DENSE_LIMIT: usize = 500;

/// Grounded Laplacian in dense form: nonnegative couplings between
/// unknowns and, per unknown, its edge weight to the seeds of each label.
/// The diagonal is implicit (the row's total weight).
#[derive(Debug, Clone)]
pub struct DenseLaplacian {
    m: usize,
    k: usize,
    coupling: Vec<f64>,
    grounding: Vec<f64>,
}

impl DenseLaplacian {
    pub fn new(unknowns: usize, labels: usize) -> Self {
        DenseLaplacian {
            m: unknowns,
            k: labels,
            coupling: vec![0.0; unknowns * unknowns],
            grounding: vec![0.0; unknowns * labels],
        }
    }

    /// Adds weight `w` between unknowns `i != j`.
    pub fn add_coupling(&mut self, i: usize, j: usize, w: f64) {
        self.coupling[i * self.m + j] += w;
        self.coupling[j * self.m + i] += w;
    }

    /// Adds weight `w` from unknown `i` to a seed of label index `l`.
    pub fn add_grounding(&mut self, i: usize, l: usize, w: f64) {
        self.grounding[i * self.k + l] += w;
    }

    /// Harmonic values for every label, row-major `m x k`.
    ///
    /// Gaussian elimination without subtraction: each pivot is recomputed
    /// as the sum of its remaining couplings and groundings instead of being
    /// updated, so the result keeps full relative precision even when the
    /// weights span hundreds of orders of magnitude.
    #[allow(clippy::needless_range_loop)]
    pub fn solve(mut self) -> Result<Vec<f64>> {
        let (m, k) = (self.m, self.k);
        let mut pivots = vec![0.0; m];
        for p in 0..m {
            let row = p * m;
            let pivot: f64 = self.coupling[row + p + 1..row + m].iter().sum::<f64>()
                + self.grounding[p * k..(p + 1) * k].iter().sum::<f64>();
            if pivot.is_nan() || pivot <= 0.0 {
                return Err(Error::Solver(format!(
                    "unknown {p} has no weight left to the seeds (underflow or disconnected system)"
                )));
            }
            pivots[p] = pivot;
            for i in p + 1..m {
                let wip = self.coupling[i * m + p];
                if wip == 0.0 {
                    continue;
                }
                let f = wip / pivot;
                for j in p + 1..m {
                    if j != i {
                        self.coupling[i * m + j] += f * self.coupling[row + j];
                    }
                }
                for l in 0..k {
                    self.grounding[i * k + l] += f * self.grounding[p * k + l];
                }
            }
        }
        let mut x = vec![0.0; m * k];
        for p in (0..m).rev() {
            for l in 0..k {
                let mut acc = self.grounding[p * k + l];
                for j in p + 1..m {
                    acc += self.coupling[p * m + j] * x[j * k + l];
                }
                x[p * k + l] = acc / pivots[p];
            }
        }
        Ok(x)
    }
}

/// Symmetric positive definite system in compressed sparse row form.
#[derive(Debug, Clone)]
pub struct SparseSpd {
    n: usize,
    row_start: Vec<usize>,
    cols: Vec<usize>,
    values: Vec<f64>,
}

impl SparseSpd {
    /// Assembles from per-row `(column, value)` lists.
    pub fn from_rows(rows: Vec<Vec<(usize, f64)>>) -> Self {
        let n = rows.len();
        let mut row_start = Vec::with_capacity(n + 1);
        let mut cols = Vec::new();
        let mut values = Vec::new();
        row_start.push(0);
        for row in rows {
            for (c, v) in row {
                cols.push(c);
                values.push(v);
            }
            row_start.push(cols.len());
        }
        Self {
            n,
            row_start,
            cols,
            values,
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.row_start[i]..self.row_start[i + 1];
        self.cols[range.clone()]
            .iter()
            .copied()
            .zip(self.values[range].iter().copied())
    }

    pub fn mul_vec(&self, x: &[f64], out: &mut [f64]) {
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.row(i).map(|(c, v)| v * x[c]).sum();
        }
    }

    fn diagonal(&self) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).filter(|&(c, _)| c == i).map(|(_, v)| v).sum())
            .collect()
    }
}

/// Jacobi-preconditioned conjugate gradients.
///
/// Stops once `|r| <= tolerance * |b|` and every scaled residual
/// `|r_i| / a_ii` is at most `tolerance`. For a grounded Laplacian the
/// scaled residual is the deviation from the weighted neighbor average, so
/// the second test matters when some degrees are tiny.
pub fn conjugate_gradient(
    a: &SparseSpd,
    b: &[f64],
    tolerance: f64,
    max_iterations: usize,
) -> Result<Vec<f64>> {
    let n = a.dim();
    let diag = a.diagonal();
    if let Some(i) = diag.iter().position(|&d| d <= 0.0) {
        return Err(Error::Solver(format!(
            "row {i} has non-positive diagonal {}",
            diag[i]
        )));
    }
    let b_norm = norm(b);
    let mut x = vec![0.0; n];
    if b_norm == 0.0 {
        return Ok(x);
    }
    let converged = |r: &[f64]| {
        norm(r) <= tolerance * b_norm && r.iter().zip(&diag).all(|(r, d)| (r / d).abs() <= tolerance)
    };
    let mut r = b.to_vec();
    let mut ap = vec![0.0; n];
    let mut iterations = 0;
    // outer loop restarts from the true residual if the recurrence drifted
    loop {
        let mut z: Vec<f64> = r.iter().zip(&diag).map(|(r, d)| r / d).collect();
        let mut p = z.clone();
        let mut rz = dot(&r, &z);
        while iterations < max_iterations && !converged(&r) {
            iterations += 1;
            a.mul_vec(&p, &mut ap);
            let pap = dot(&p, &ap);
            if pap <= 0.0 {
                return Err(Error::Solver("matrix is not positive definite".into()));
            }
            let alpha = rz / pap;
            for i in 0..n {
                x[i] += alpha * p[i];
                r[i] -= alpha * ap[i];
            }
            for i in 0..n {
                z[i] = r[i] / diag[i];
            }
            let rz_next = dot(&r, &z);
            let beta = rz_next / rz;
            rz = rz_next;
            for i in 0..n {
                p[i] = z[i] + beta * p[i];
            }
        }
        a.mul_vec(&x, &mut ap);
        for i in 0..n {
            r[i] = b[i] - ap[i];
        }
        if converged(&r) {
            return Ok(x);
        }
        if iterations >= max_iterations {
            break;
        }
    }
    Err(Error::Solver(format!(
        "conjugate gradients did not reach tolerance {tolerance:e} in {max_iterations} iterations (relative residual {:e})",
        norm(&r) / b_norm
    )))
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}
