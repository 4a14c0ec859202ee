//! Pochhammer symbols, Gegenbauer polynomials and the Gegenbauer-sum
//! representation of the symmetric-case polynomial
//!
//! ```text
//! Σ_{i=0}^{n} C(n,i) (-β-n)_i κ_{n-i}(λ) C^{(λ+i)}_{n-i}(x) x^{n-i},
//! κ_n(λ) = (-1)^n (2λ)_n / (2^n (λ+1/2)_n n!)
//! ```
//!
//! The sum is evaluated exactly as written and only ever compared against the
//! oracle; at `n = 1` its monic form has no real zeros while
//! `P_{1,1}^{(λ-1/2, β, λ-1/2)}(x; -1) = x^2 - (β+1)/(β+2λ+2)`, so nothing
//! computes zeros from it.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gram;
use crate::polynomial::{MonicPolynomial, ZeroSet};
use crate::weight::AngelescoParams;

/// Rising factorial `x (x+1) ... (x+k-1)`; `(x)_0 = 1`.
pub fn pochhammer(x: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (x + i as f64))
}

/// `C_n^{(λ)}(x)` by the three-term recurrence.
pub fn gegenbauer(n: usize, lambda: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * lambda * x;
    for k in 2..=n {
        let kf = k as f64;
        let next = (2.0 * x * (kf + lambda - 1.0) * cur - (kf + 2.0 * lambda - 2.0) * prev) / kf;
        prev = cur;
        cur = next;
    }
    cur
}

/// Ascending monomial coefficients of `C_n^{(λ)}`.
pub fn gegenbauer_coeffs(n: usize, lambda: f64) -> Vec<f64> {
    let mut prev = vec![1.0];
    if n == 0 {
        return prev;
    }
    let mut cur = vec![0.0, 2.0 * lambda];
    for k in 2..=n {
        let kf = k as f64;
        let mut next = vec![0.0; k + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += 2.0 * (kf + lambda - 1.0) * c / kf;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= (kf + 2.0 * lambda - 2.0) * c / kf;
        }
        prev = cur;
        cur = next;
    }
    cur
}

fn kappa(n: usize, lambda: f64) -> f64 {
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let factorial = (1..=n).fold(1.0, |acc, k| acc * k as f64);
    sign * pochhammer(2.0 * lambda, n)
        / (2f64.powi(n as i32) * pochhammer(lambda + 0.5, n) * factorial)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetricExpansion {
    pub n: usize,
    pub lambda: f64,
    pub beta: f64,
    /// Ascending monomial coefficients of the sum, degree `2n`.
    pub coeffs: Vec<f64>,
    /// `coeffs` divided by the leading coefficient.
    pub monic: Vec<f64>,
}

impl SymmetricExpansion {
    pub fn odd_residual(&self) -> f64 {
        self.coeffs
            .iter()
            .skip(1)
            .step_by(2)
            .fold(0.0, |m, c| m.max(c.abs()))
    }
}

fn check_inputs(n: usize, lambda: f64, beta: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::Config(
            "expansion degree n must be at least 1".into(),
        ));
    }
    if !(lambda > -0.5) || lambda == 0.0 || !lambda.is_finite() {
        return Err(Error::InvalidParam {
            field: "lambda",
            message: "must exceed -1/2 and be nonzero",
            value: lambda,
        });
    }
    if !(beta > -1.0) || !beta.is_finite() {
        return Err(Error::InvalidParam {
            field: "beta",
            message: "must exceed -1",
            value: beta,
        });
    }
    Ok(())
}

/// Monomial coefficients of the Gegenbauer sum, term by term.
pub fn symmetric_expansion(n: usize, lambda: f64, beta: f64) -> Result<SymmetricExpansion> {
    check_inputs(n, lambda, beta)?;
    let mut coeffs = vec![0.0; 2 * n + 1];
    for i in 0..=n {
        let deg = n - i;
        let factor = binomial(n, i) * pochhammer(-beta - n as f64, i) * kappa(deg, lambda);
        // C^{(λ+i)}_{deg}(x) x^{deg}
        for (j, c) in gegenbauer_coeffs(deg, lambda + i as f64).iter().enumerate() {
            coeffs[j + deg] += factor * c;
        }
    }
    let lead = *coeffs.last().unwrap();
    let monic = coeffs.iter().map(|c| c / lead).collect();
    Ok(SymmetricExpansion {
        n,
        lambda,
        beta,
        coeffs,
        monic,
    })
}

/// Comparison of the Gegenbauer sum with the oracle polynomial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionDiagnostic {
    pub n: usize,
    pub lambda: f64,
    pub beta: f64,
    pub printed_monic: Vec<f64>,
    pub oracle_monic: Vec<f64>,
    /// Max absolute difference between the two monic coefficient vectors.
    pub coefficient_difference: f64,
    /// Largest odd-power coefficient of the sum.
    pub evenness_residual: f64,
    /// Largest odd-power coefficient of the oracle polynomial.
    pub oracle_evenness_residual: f64,
    /// Hausdorff distance between the oracle zeros and the complex roots of the sum.
    pub zero_set_distance: f64,
    /// Real roots of the sum inside `(-1, 1)`.
    pub printed_real_zeros: usize,
    pub oracle_zeros: ZeroSet,
}

/// Complex roots of a monic polynomial via its companion matrix.
fn complex_roots(monic: &[f64]) -> Vec<(f64, f64)> {
    let deg = monic.len() - 1;
    let mut c = DMatrix::<f64>::zeros(deg, deg);
    for i in 1..deg {
        c[(i, i - 1)] = 1.0;
    }
    for i in 0..deg {
        c[(i, deg - 1)] = -monic[i];
    }
    c.complex_eigenvalues()
        .iter()
        .map(|z| (z.re, z.im))
        .collect()
}

pub fn expansion_diagnostic(n: usize, lambda: f64, beta: f64) -> Result<ExpansionDiagnostic> {
    let printed = symmetric_expansion(n, lambda, beta)?;
    let params = AngelescoParams::new(-1.0, lambda - 0.5, beta, lambda - 0.5)?;
    let oracle = gram::build_type2(&params, n, n)?;
    let oracle_zeros = gram::localize_roots(&oracle, &params, n, n)?;

    let coefficient_difference = printed
        .monic
        .iter()
        .zip(oracle.monic.coeffs())
        .fold(0.0, |m: f64, (a, b)| m.max((a - b).abs()));

    let roots = complex_roots(&printed.monic);
    let printed_real_zeros = roots
        .iter()
        .filter(|(re, im)| im.abs() <= 1e-9 * re.abs().max(1.0) && re.abs() < 1.0)
        .count();
    let dist = |(re, im): (f64, f64), z: f64| (re - z).hypot(im);
    let forward = oracle_zeros
        .iter()
        .map(|z| {
            roots
                .iter()
                .map(|&r| dist(r, z))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max);
    let backward = roots
        .iter()
        .map(|&r| {
            oracle_zeros
                .iter()
                .map(|z| dist(r, z))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max);

    Ok(ExpansionDiagnostic {
        n,
        lambda,
        beta,
        evenness_residual: printed.odd_residual(),
        oracle_evenness_residual: MonicPolynomial::odd_residual(&oracle.monic),
        printed_monic: printed.monic,
        oracle_monic: oracle.monic.coeffs().to_vec(),
        coefficient_difference,
        zero_set_distance: forward.max(backward),
        printed_real_zeros,
        oracle_zeros,
    })
}
