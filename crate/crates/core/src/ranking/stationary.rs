use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::transition::TransitionMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    PowerIteration,
    DirectSolve,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("power iteration did not converge in {iterations} iterations (last step {step:e})")]
    NonConvergence { iterations: usize, step: f64 },
    #[error("linear system is singular at column {column}")]
    SingularSystem { column: usize },
    #[error("transition matrix is not primitive")]
    NotPrimitive,
    #[error("invalid solver options: {0}")]
    InvalidOptions(String),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerOptions {
    /// Stop once the L1 change between iterates is at most this.
    pub tol: f64,
    pub max_iters: usize,
}

impl Default for PowerOptions {
    fn default() -> Self {
        PowerOptions {
            tol: 1e-12,
            max_iters: 1_000_000,
        }
    }
}

/// Stationary probability vector over the nodes, goal last.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankVector {
    pub values: Vec<f64>,
    /// `‖Tᵗv − v‖∞` at the returned `v`.
    pub residual: f64,
    pub method: SolveMethod,
    pub iterations: usize,
}

impl RankVector {
    pub fn player_ranks(&self) -> &[f64] {
        &self.values[..self.values.len() - 1]
    }

    pub fn goal_rank(&self) -> f64 {
        *self.values.last().expect("rank vector has a goal entry")
    }

    /// Largest absolute entrywise difference.
    pub fn max_diff(&self, other: &RankVector) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// `out = Tᵗ v` for row-major `t`.
fn left_mul(t: &[f64], v: &[f64], out: &mut [f64]) {
    let s = v.len();
    out.iter_mut().for_each(|x| *x = 0.0);
    for (i, &vi) in v.iter().enumerate() {
        if vi == 0.0 {
            continue;
        }
        for (o, &tij) in out.iter_mut().zip(&t[i * s..(i + 1) * s]) {
            *o += tij * vi;
        }
    }
}

/// `‖Tᵗv − v‖∞`.
pub fn stationary_residual(t: &TransitionMatrix, v: &[f64]) -> f64 {
    let tf = t.to_f64();
    let mut next = vec![0.0; v.len()];
    left_mul(&tf, v, &mut next);
    next.iter()
        .zip(v)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

/// Power iteration `v ← Tᵗv` from the uniform vector.
pub fn stationary_power(
    t: &TransitionMatrix,
    opts: PowerOptions,
) -> Result<RankVector, SolveError> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(SolveError::InvalidOptions(format!("tol must be positive, got {}", opts.tol)));
    }
    if opts.max_iters == 0 {
        return Err(SolveError::InvalidOptions("max_iters must be at least 1".into()));
    }
    let s = t.size();
    let tf = t.to_f64();
    let mut v = vec![1.0 / s as f64; s];
    let mut next = vec![0.0; s];
    let mut step = f64::INFINITY;

    for iter in 1..=opts.max_iters {
        left_mul(&tf, &v, &mut next);
        let total: f64 = next.iter().sum();
        next.iter_mut().for_each(|x| *x /= total);
        step = v.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut v, &mut next);
        if step <= opts.tol {
            let residual = stationary_residual(t, &v);
            return Ok(RankVector {
                values: v,
                residual,
                method: SolveMethod::PowerIteration,
                iterations: iter,
            });
        }
    }
    Err(SolveError::NonConvergence {
        iterations: opts.max_iters,
        step,
    })
}

/// Solves `(Tᵗ − I) v = 0` with the last equation replaced by `Σv = 1`,
/// by Gaussian elimination with partial pivoting.
pub fn stationary_direct(t: &TransitionMatrix) -> Result<RankVector, SolveError> {
    let s = t.size();
    let tf = t.to_f64();
    // Augmented system, row-major with s + 1 columns.
    let w = s + 1;
    let mut a = vec![0.0; s * w];
    for i in 0..s {
        for j in 0..s {
            a[i * w + j] = tf[j * s + i] - if i == j { 1.0 } else { 0.0 };
        }
    }
    for j in 0..s {
        a[(s - 1) * w + j] = 1.0;
    }
    a[(s - 1) * w + s] = 1.0;

    for col in 0..s {
        let pivot = (col..s)
            .max_by(|&x, &y| a[x * w + col].abs().total_cmp(&a[y * w + col].abs()))
            .expect("non-empty range");
        if a[pivot * w + col].abs() < 1e-13 {
            return Err(SolveError::SingularSystem { column: col });
        }
        if pivot != col {
            for j in 0..w {
                a.swap(col * w + j, pivot * w + j);
            }
        }
        let p = a[col * w + col];
        for r in col + 1..s {
            let f = a[r * w + col] / p;
            if f == 0.0 {
                continue;
            }
            for j in col..w {
                a[r * w + j] -= f * a[col * w + j];
            }
        }
    }

    let mut v = vec![0.0; s];
    for i in (0..s).rev() {
        let tail: f64 = (i + 1..s).map(|j| a[i * w + j] * v[j]).sum();
        v[i] = (a[i * w + s] - tail) / a[i * w + i];
    }
    // Roundoff can leave entries at -1e-17 or so.
    for x in &mut v {
        if *x < 0.0 && *x > -1e-12 {
            *x = 0.0;
        }
    }
    let total: f64 = v.iter().sum();
    v.iter_mut().for_each(|x| *x /= total);

    let residual = stationary_residual(t, &v);
    Ok(RankVector {
        values: v,
        residual,
        method: SolveMethod::DirectSolve,
        iterations: 0,
    })
}
