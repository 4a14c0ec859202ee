//! Dense LU with partial pivoting and a one-norm condition estimate.
//! The systems here are at most a few dozen unknowns.

use crate::error::{Error, Result};
use crate::gram::CONDITION_LIMIT;

/// Solves `G c = -r` for rows laid out as `[G_i | r_i]`, scaling each row to
/// unit max-norm first. Fails above [`CONDITION_LIMIT`].
pub(crate) fn solve_row_scaled(
    rows: Vec<Vec<f64>>,
    size: usize,
    context: impl Fn() -> String,
) -> Result<Vec<f64>> {
    let mut matrix = Vec::with_capacity(size * size);
    let mut rhs = Vec::with_capacity(size);
    for row in rows {
        let scale = row[..size].iter().fold(0.0, |m: f64, v| m.max(v.abs()));
        let scale = if scale > 0.0 { scale } else { 1.0 };
        matrix.extend(row[..size].iter().map(|v| v / scale));
        rhs.push(-row[size] / scale);
    }
    let lu = Lu::factor(size, matrix).ok_or_else(|| Error::SingularSystem {
        condition: f64::INFINITY,
        context: context(),
    })?;
    let condition = lu.condition_estimate();
    if !(condition <= CONDITION_LIMIT) {
        return Err(Error::SingularSystem {
            condition,
            context: context(),
        });
    }
    Ok(lu.solve(&rhs))
}

#[derive(Debug, Clone)]
pub(crate) struct Lu {
    n: usize,
    // Row-major combined L (unit, below diagonal) and U.
    lu: Vec<f64>,
    perm: Vec<usize>,
    norm1: f64,
}

impl Lu {
    /// Factorizes the row-major `n x n` matrix. Returns `None` on an exactly zero pivot.
    pub fn factor(n: usize, mut a: Vec<f64>) -> Option<Self> {
        assert_eq!(a.len(), n * n);
        let norm1 = (0..n)
            .map(|j| (0..n).map(|i| a[i * n + j].abs()).sum::<f64>())
            .fold(0.0, f64::max);
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let pivot = (k..n)
                .max_by(|&i, &j| a[i * n + k].abs().total_cmp(&a[j * n + k].abs()))
                .unwrap();
            if a[pivot * n + k] == 0.0 {
                return None;
            }
            if pivot != k {
                for j in 0..n {
                    a.swap(k * n + j, pivot * n + j);
                }
                perm.swap(k, pivot);
            }
            let d = a[k * n + k];
            for i in k + 1..n {
                let l = a[i * n + k] / d;
                a[i * n + k] = l;
                if l != 0.0 {
                    for j in k + 1..n {
                        a[i * n + j] -= l * a[k * n + j];
                    }
                }
            }
        }
        Some(Self {
            n,
            lu: a,
            perm,
            norm1,
        })
    }

    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                x[i] -= self.lu[i * n + j] * x[j];
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                x[i] -= self.lu[i * n + j] * x[j];
            }
            x[i] /= self.lu[i * n + i];
        }
        x
    }

    /// Solves `A^T x = b`.
    pub fn solve_transpose(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut y = b.to_vec();
        // U^T y = b
        for i in 0..n {
            for j in 0..i {
                y[i] -= self.lu[j * n + i] * y[j];
            }
            y[i] /= self.lu[i * n + i];
        }
        // L^T z = y
        for i in (0..n).rev() {
            for j in i + 1..n {
                y[i] -= self.lu[j * n + i] * y[j];
            }
        }
        let mut x = vec![0.0; n];
        for (i, &p) in self.perm.iter().enumerate() {
            x[p] = y[i];
        }
        x
    }

    /// Hager's estimate of `||A||_1 ||A^-1||_1`.
    pub fn condition_estimate(&self) -> f64 {
        let n = self.n;
        if n == 0 {
            return 1.0;
        }
        let mut x = vec![1.0 / n as f64; n];
        let mut estimate = 0.0;
        for _ in 0..5 {
            let y = self.solve(&x);
            estimate = y.iter().map(|v| v.abs()).sum::<f64>();
            let signs: Vec<f64> = y
                .iter()
                .map(|v| if *v >= 0.0 { 1.0 } else { -1.0 })
                .collect();
            let z = self.solve_transpose(&signs);
            let (j, zmax) = z
                .iter()
                .enumerate()
                .map(|(i, v)| (i, v.abs()))
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            let ztx: f64 = z.iter().zip(&x).map(|(a, b)| a * b).sum();
            if zmax <= ztx {
                break;
            }
            x = vec![0.0; n];
            x[j] = 1.0;
        }
        estimate * self.norm1
    }
}
