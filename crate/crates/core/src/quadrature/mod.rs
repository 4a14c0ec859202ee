//! Gauss rules from three-term recurrences (Golub-Welsch), adaptive
//! weighted integration over the two Angelesco intervals, and Gamma.

mod eigen;
mod gamma;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::AngelescoParams;

pub use gamma::gamma_function;
pub(crate) use gamma::{beta_positive, gamma_positive};

/// Weight family of a Gauss rule on its reference interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Family {
    /// `(1 - t)^p (1 + t)^q` on `[-1, 1]`.
    Jacobi { p: f64, q: f64 },
    /// `t^p e^-t` on `[0, inf)`.
    Laguerre { p: f64 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Jacobi { p, q } => write!(f, "jacobi({p}, {q})"),
            Family::Laguerre { p } => write!(f, "laguerre({p})"),
        }
    }
}

impl Family {
    fn validate(&self) -> Result<()> {
        let check = |field, v: f64| {
            if v > -1.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidParam {
                    field,
                    message: "must exceed -1",
                    value: v,
                })
            }
        };
        match *self {
            Family::Jacobi { p, q } => check("p", p).and(check("q", q)),
            Family::Laguerre { p } => check("p", p),
        }
    }

    /// Total mass of the weight (zeroth moment).
    pub fn mass(&self) -> f64 {
        match *self {
            Family::Jacobi { p, q } => 2f64.powf(p + q + 1.0) * beta_positive(p + 1.0, q + 1.0),
            Family::Laguerre { p } => gamma_positive(p + 1.0),
        }
    }

    /// `(diag, offdiag_sq)` of the monic recurrence
    /// `pi_{k+1} = (t - diag_k) pi_k - offdiag_sq_k pi_{k-1}`.
    /// At `k = 0` the second entry is the mass.
    pub fn recurrence(&self, k: usize) -> (f64, f64) {
        match *self {
            Family::Jacobi { p, q } => jacobi_recurrence_coefficients(k, p, q),
            Family::Laguerre { p } => {
                let kf = k as f64;
                let b = if k == 0 { self.mass() } else { kf * (kf + p) };
                (2.0 * kf + p + 1.0, b)
            }
        }
    }
}

/// Monic three-term recurrence coefficients for `(1 - t)^p (1 + t)^q` on `[-1, 1]`.
///
/// For `k = 0` the squared off-diagonal slot holds the total mass.
pub fn jacobi_recurrence_coefficients(k: usize, p: f64, q: f64) -> (f64, f64) {
    let kf = k as f64;
    let s = 2.0 * kf + p + q;
    if k == 0 {
        let diag = (q - p) / (p + q + 2.0);
        let mass = 2f64.powf(p + q + 1.0) * beta_positive(p + 1.0, q + 1.0);
        return (diag, mass);
    }
    let diag = (q * q - p * p) / (s * (s + 2.0));
    let offdiag_sq = if k == 1 {
        // The general formula is 0/0 when p + q = -1.
        4.0 * (1.0 + p) * (1.0 + q) / ((2.0 + p + q).powi(2) * (3.0 + p + q))
    } else {
        4.0 * kf * (kf + p) * (kf + q) * (kf + p + q) / (s * s * (s + 1.0) * (s - 1.0))
    };
    (diag, offdiag_sq)
}

/// Nodes and weights of an m-point Gauss rule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub family: Family,
}

impl QuadratureRule {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    /// `sum_i w_i f(t_i)`.
    pub fn apply(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&t, &w)| w * f(t))
            .sum()
    }
}

/// Builds the m-point Gauss rule for `family` by Golub-Welsch.
pub fn gauss_rule(m: usize, family: Family) -> Result<QuadratureRule> {
    if m == 0 {
        return Err(Error::Config("rule size must be at least 1".into()));
    }
    family.validate()?;
    let mut diag = Vec::with_capacity(m);
    let mut offdiag = Vec::with_capacity(m - 1);
    let mut mass = 0.0;
    for k in 0..m {
        let (d, b) = family.recurrence(k);
        diag.push(d);
        if k == 0 {
            mass = b;
        } else {
            offdiag.push(b.sqrt());
        }
    }
    let eig =
        eigen::tridiagonal_eigen(&diag, &offdiag).ok_or_else(|| Error::EigenNoConvergence {
            size: m,
            family: family.to_string(),
        })?;
    let mut pairs: Vec<(f64, f64)> = eig
        .values
        .into_iter()
        .zip(eig.first_components)
        .map(|(t, v)| (t, mass * v * v))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (nodes, weights) = pairs.into_iter().unzip();
    Ok(QuadratureRule {
        nodes,
        weights,
        family,
    })
}

/// Zeros of the degree-`n` orthogonal polynomial of the discrete measure
/// `sum_i w_i δ(x - x_i)`: Stieltjes for the recurrence, then the Jacobi
/// matrix eigenvalues, ascending. Weights must be nonnegative.
pub fn discrete_orthogonal_zeros(nodes: &[f64], weights: &[f64], n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let support = weights.iter().filter(|w| **w > 0.0).count();
    if nodes.len() != weights.len() || support < n {
        return Err(Error::Config(format!(
            "a discrete measure on {support} points has no orthogonal polynomial of degree {n}"
        )));
    }
    let mass: f64 = weights.iter().sum();
    let mut prev = vec![0.0; nodes.len()];
    let mut cur = vec![1.0 / mass.sqrt(); nodes.len()];
    let mut diag = Vec::with_capacity(n);
    let mut offdiag: Vec<f64> = Vec::with_capacity(n - 1);
    for k in 0..n {
        let alpha: f64 = (0..nodes.len())
            .map(|i| weights[i] * nodes[i] * cur[i] * cur[i])
            .sum();
        diag.push(alpha);
        if k + 1 == n {
            break;
        }
        let b = offdiag.last().copied().unwrap_or(0.0);
        let mut next: Vec<f64> = (0..nodes.len())
            .map(|i| (nodes[i] - alpha) * cur[i] - b * prev[i])
            .collect();
        let norm = (0..nodes.len())
            .map(|i| weights[i] * next[i] * next[i])
            .sum::<f64>()
            .sqrt();
        next.iter_mut().for_each(|v| *v /= norm);
        offdiag.push(norm);
        prev = std::mem::replace(&mut cur, next);
    }
    let eig =
        eigen::tridiagonal_eigen(&diag, &offdiag).ok_or_else(|| Error::EigenNoConvergence {
            size: n,
            family: "discrete".into(),
        })?;
    let mut zeros = eig.values;
    zeros.sort_by(f64::total_cmp);
    Ok(zeros)
}

/// Which orthogonality interval an integral runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Interval {
    /// `[a, 0]`
    Left,
    /// `[0, 1]`
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegralResult {
    pub value: f64,
    pub error_estimate: f64,
    pub rule_size_used: usize,
}

/// Multiple of `eps * sum |w f|` treated as the rounding floor of a Gauss sum.
const ROUNDOFF_FACTOR: f64 = 64.0;

pub(crate) const MAX_DOUBLINGS: usize = 12;

/// One weighted segment: `prefactor * sum_i w_i smooth(x_i) g(x_i)` with `x_i = map(t_i)`.
pub(crate) struct Segment<M, S> {
    pub family: Family,
    pub prefactor: f64,
    pub map: M,
    pub smooth: S,
}

impl<M: Fn(f64) -> f64, S: Fn(f64) -> f64> Segment<M, S> {
    /// Vector-valued adaptive integration. `integrand(x, out)` writes the
    /// unweighted values. The rule size doubles from `start` until two
    /// successive results differ by at most `tol * max(floor, max |value|)`,
    /// or by no more than the rounding error of the sums themselves
    /// (`ROUNDOFF_FACTOR * eps * sum |w f|`), below which doubling cannot help.
    pub fn integrate(
        &self,
        start: usize,
        tol: f64,
        floor: f64,
        len: usize,
        mut integrand: impl FnMut(f64, &mut [f64]),
    ) -> Result<(Vec<f64>, f64, usize)> {
        let mut size = start.max(1);
        let mut previous: Option<Vec<f64>> = None;
        let mut buf = vec![0.0; len];
        let mut last_diff = f64::INFINITY;
        for _ in 0..=MAX_DOUBLINGS {
            let rule = gauss_rule(size, self.family)?;
            let mut acc = vec![0.0; len];
            let mut magnitude = vec![0.0; len];
            for (&t, &w) in rule.nodes.iter().zip(&rule.weights) {
                let x = (self.map)(t);
                let ws = w * (self.smooth)(x);
                if ws == 0.0 {
                    continue;
                }
                integrand(x, &mut buf);
                for ((a, m), b) in acc.iter_mut().zip(magnitude.iter_mut()).zip(&buf) {
                    *a += ws * b;
                    *m += (ws * b).abs();
                }
            }
            for a in acc.iter_mut() {
                *a *= self.prefactor;
            }
            if let Some(prev) = &previous {
                let scale = acc.iter().fold(floor, |m, v| m.max(v.abs()));
                let diff = acc
                    .iter()
                    .zip(prev)
                    .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
                let rounding = magnitude.iter().fold(0.0f64, |m, v| m.max(v.abs()))
                    * self.prefactor.abs()
                    * ROUNDOFF_FACTOR
                    * f64::EPSILON;
                if diff <= tol * scale || diff <= rounding {
                    return Ok((acc, diff, size));
                }
                last_diff = diff;
            }
            previous = Some(acc);
            size *= 2;
        }
        Err(Error::QuadratureNoConvergence {
            doublings: MAX_DOUBLINGS,
            size: size / 2,
            difference: last_diff,
        })
    }
}

/// The segment for one Angelesco interval. Left: `x = a(1 - t)/2` with the
/// endpoint factors absorbed into `jacobi(beta, alpha)` and `(1 - x)^gamma`
/// sampled. Right: `x = (1 + t)/2` with `jacobi(gamma, beta)` and
/// `(x - a)^alpha` sampled.
pub(crate) fn angelesco_segment(
    p: &AngelescoParams,
    interval: Interval,
) -> Segment<impl Fn(f64) -> f64, impl Fn(f64) -> f64> {
    let AngelescoParams {
        a,
        alpha,
        beta,
        gamma,
    } = *p;
    let (family, prefactor, is_left) = match interval {
        Interval::Left => (
            Family::Jacobi { p: beta, q: alpha },
            (-a / 2.0).powf(alpha + beta + 1.0),
            true,
        ),
        Interval::Right => (
            Family::Jacobi { p: gamma, q: beta },
            0.5f64.powf(beta + gamma + 1.0),
            false,
        ),
    };
    Segment {
        family,
        prefactor,
        map: move |t: f64| {
            if is_left {
                a * (1.0 - t) / 2.0
            } else {
                (1.0 + t) / 2.0
            }
        },
        smooth: move |x: f64| {
            if is_left {
                (1.0 - x).powf(gamma)
            } else {
                (x - a).powf(alpha)
            }
        },
    }
}

/// `∫ q(x) w(x) dx` over one interval, for `q` given by ascending monomial coefficients.
pub fn integrate_poly_against_weight(
    poly: &[f64],
    p: &AngelescoParams,
    interval: Interval,
    tol: f64,
) -> Result<IntegralResult> {
    if !(tol > 0.0) {
        return Err(Error::Config(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let degree = poly.len().saturating_sub(1);
    let segment = angelesco_segment(p, interval);
    let (values, error_estimate, rule_size_used) =
        segment.integrate(degree / 2 + 8, tol, 1.0, 1, |x, out| {
            out[0] = poly.iter().rev().fold(0.0, |acc, c| acc * x + c);
        })?;
    Ok(IntegralResult {
        value: values[0],
        error_estimate,
        rule_size_used,
    })
}
