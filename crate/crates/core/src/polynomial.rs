//! Polynomial containers shared by the oracle, the limit families and the diagnostics.

use serde::{Deserialize, Serialize};

/// Anything that can be evaluated as a real polynomial of known degree.
pub trait RealPolynomial {
    fn degree(&self) -> usize;
    fn eval(&self, x: f64) -> f64;
}

/// Monic polynomial with ascending monomial coefficients; the last one is exactly 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonicPolynomial {
    coeffs: Vec<f64>,
}

impl MonicPolynomial {
    /// Builds from ascending coefficients of a polynomial with nonzero leading
    /// coefficient, dividing through so the result is monic.
    ///
    /// Panics on an empty slice or a zero leading coefficient.
    pub fn from_coeffs(coeffs: &[f64]) -> Self {
        let lead = *coeffs
            .last()
            .expect("polynomial needs at least one coefficient");
        assert!(lead != 0.0, "leading coefficient must be nonzero");
        let mut coeffs: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
        *coeffs.last_mut().unwrap() = 1.0;
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1.0] }
    }

    /// `prod (x - r)` over `roots`.
    pub fn from_roots(roots: &[f64]) -> Self {
        let mut coeffs = vec![1.0];
        for &r in roots {
            let mut next = vec![0.0; coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= r * c;
            }
            coeffs = next;
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Largest absolute odd-power coefficient.
    pub fn odd_residual(&self) -> f64 {
        self.coeffs
            .iter()
            .skip(1)
            .step_by(2)
            .fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl RealPolynomial for MonicPolynomial {
    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Compensated Horner evaluation: as accurate as plain Horner in twice
    /// the working precision.
    fn eval(&self, x: f64) -> f64 {
        compensated_horner(&self.coeffs, x)
    }
}

/// `prod (x - r)` kept factored. Unlike any expansion it stays accurate
/// relative to its own size wherever it is evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct RootProduct {
    roots: Vec<f64>,
}

impl RootProduct {
    pub fn new(roots: Vec<f64>) -> Self {
        Self { roots }
    }

    pub fn roots(&self) -> &[f64] {
        &self.roots
    }
}

impl From<&ZeroSet> for RootProduct {
    fn from(zeros: &ZeroSet) -> Self {
        Self::new(zeros.all())
    }
}

impl RealPolynomial for RootProduct {
    fn degree(&self) -> usize {
        self.roots.len()
    }

    fn eval(&self, x: f64) -> f64 {
        self.roots.iter().map(|r| x - r).product()
    }
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

pub(crate) fn compensated_horner(coeffs: &[f64], x: f64) -> f64 {
    let mut iter = coeffs.iter().rev();
    let Some(&lead) = iter.next() else {
        return 0.0;
    };
    let mut s = lead;
    let mut c = 0.0;
    for &a in iter {
        let (p, pi) = two_prod(s, x);
        let (t, sigma) = two_sum(p, a);
        s = t;
        c = c * x + (pi + sigma);
    }
    s + c
}

/// Zeros split by interval: `negative` in `(a, 0)`, `positive` in `(0, 1)`
/// or `(0, inf)` for the half-line families. Both groups ascend.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ZeroSet {
    pub negative: Vec<f64>,
    pub positive: Vec<f64>,
}

impl ZeroSet {
    pub fn new(negative: Vec<f64>, positive: Vec<f64>) -> Self {
        Self { negative, positive }
    }

    pub fn counts(&self) -> (usize, usize) {
        (self.negative.len(), self.positive.len())
    }

    pub fn len(&self) -> usize {
        self.negative.len() + self.positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All zeros in ascending order.
    pub fn all(&self) -> Vec<f64> {
        self.negative
            .iter()
            .chain(&self.positive)
            .copied()
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.negative.iter().chain(&self.positive).copied()
    }

    /// Max componentwise distance between two zero sets with equal counts.
    /// Returns `inf` when the counts differ.
    pub fn max_distance(&self, other: &ZeroSet) -> f64 {
        if self.counts() != other.counts() {
            return f64::INFINITY;
        }
        self.iter()
            .zip(other.iter())
            .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
    }

    /// Max of `|z_j + z_{N+1-j}|`: zero for a set symmetric about the origin.
    pub fn symmetry_defect(&self) -> f64 {
        let all = self.all();
        all.iter()
            .zip(all.iter().rev())
            .fold(0.0, |m, (x, y)| m.max((x + y).abs()))
    }

    pub fn scaled(&self, factor: f64) -> ZeroSet {
        ZeroSet {
            negative: self.negative.iter().map(|z| z * factor).collect(),
            positive: self.positive.iter().map(|z| z * factor).collect(),
        }
    }
}
