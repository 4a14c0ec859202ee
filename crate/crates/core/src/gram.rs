//! Type II multiple orthogonal polynomials built directly from their
//! orthogonality conditions. Independent of the ladder in [`crate::cascade`],
//! so it serves as the reference those zeros are checked against.
//!
//! The unknown polynomial lives in the Chebyshev basis of `[a, 1]` and is
//! tested against the shifted Chebyshev polynomials of each interval; raw
//! monomials would make the system Hankel-like and useless past degree ~8.

use crate::error::{Error, Result};
use crate::linalg::Lu;
use crate::polynomial::{MonicPolynomial, RealPolynomial, ZeroSet};
use crate::quadrature::{angelesco_segment, gauss_rule, Interval};
use crate::roots;
use crate::twosided::{self, SideMeasure};
use crate::weight::AngelescoParams;

/// Condition estimates above this are treated as singular.
pub const CONDITION_LIMIT: f64 = 1e14;

/// Relative tolerance for the adaptive inner products.
const GRAM_QUADRATURE_TOL: f64 = 1e-13;

/// Chebyshev series on `[lo, hi]`, evaluated by Clenshaw.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevSeries {
    pub lo: f64,
    pub hi: f64,
    pub coeffs: Vec<f64>,
}

impl ChebyshevSeries {
    fn reduce(&self, x: f64) -> f64 {
        (2.0 * x - self.lo - self.hi) / (self.hi - self.lo)
    }

    /// Monomial coefficients in `x`, ascending.
    pub fn to_monomial(&self) -> Vec<f64> {
        let scale = 2.0 / (self.hi - self.lo);
        let shift = -(self.lo + self.hi) / (self.hi - self.lo);
        let n = self.coeffs.len();
        let mut out = vec![0.0; n];
        let mut prev = vec![1.0];
        let mut cur = vec![shift, scale];
        for (k, &c) in self.coeffs.iter().enumerate() {
            let t = match k {
                0 => &prev,
                1 => &cur,
                _ => {
                    let mut next = vec![0.0; cur.len() + 1];
                    for (i, &v) in cur.iter().enumerate() {
                        next[i] += 2.0 * shift * v;
                        next[i + 1] += 2.0 * scale * v;
                    }
                    for (i, &v) in prev.iter().enumerate() {
                        next[i] -= v;
                    }
                    prev = std::mem::replace(&mut cur, next);
                    &cur
                }
            };
            for (o, v) in out.iter_mut().zip(t) {
                *o += c * v;
            }
        }
        out
    }
}

impl RealPolynomial for ChebyshevSeries {
    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn eval(&self, x: f64) -> f64 {
        let t = self.reduce(x);
        let (mut b1, mut b2) = (0.0, 0.0);
        for &c in self.coeffs.iter().skip(1).rev() {
            let b0 = 2.0 * t * b1 - b2 + c;
            b2 = b1;
            b1 = b0;
        }
        t * b1 - b2 + self.coeffs.first().copied().unwrap_or(0.0)
    }
}

/// `T_0(t), ..., T_{len-1}(t)` into `out`.
pub(crate) fn chebyshev_values(t: f64, out: &mut [f64]) {
    for k in 0..out.len() {
        out[k] = match k {
            0 => 1.0,
            1 => t,
            _ => 2.0 * t * out[k - 1] - out[k - 2],
        };
    }
}

/// An oracle polynomial: the monic monomial form plus the Chebyshev
/// representation it was solved in (used for accurate evaluation).
#[derive(Debug, Clone, PartialEq)]
pub struct Type2Polynomial {
    pub monic: MonicPolynomial,
    pub series: ChebyshevSeries,
    pub condition: f64,
}

impl RealPolynomial for Type2Polynomial {
    fn degree(&self) -> usize {
        self.monic.degree()
    }

    fn eval(&self, x: f64) -> f64 {
        self.series.eval(x)
    }
}

/// Builds `P_{n,m}` with its Chebyshev representation and condition estimate.
pub fn build_type2(p: &AngelescoParams, n: usize, m: usize) -> Result<Type2Polynomial> {
    let p = p.validate()?;
    let total = n + m;
    if total == 0 {
        return Ok(Type2Polynomial {
            monic: MonicPolynomial::one(),
            series: ChebyshevSeries {
                lo: p.a,
                hi: 1.0,
                coeffs: vec![1.0],
            },
            condition: 1.0,
        });
    }

    // Leading x-coefficient of T_N on [a, 1].
    let lead = 2f64.powi(total as i32 - 1) * (2.0 / (1.0 - p.a)).powi(total as i32);
    let basis_len = total + 1;
    let reduce_full = |x: f64| (2.0 * x - p.a - 1.0) / (1.0 - p.a);

    // Rows: [G | rhs] for each test function.
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(total);
    for (interval, tests) in [(Interval::Left, n), (Interval::Right, m)] {
        if tests == 0 {
            continue;
        }
        let reduce_local = |x: f64| match interval {
            Interval::Left => (2.0 * x - p.a) / -p.a,
            Interval::Right => 2.0 * x - 1.0,
        };
        let segment = angelesco_segment(&p, interval);
        let mut tv = vec![0.0; tests];
        let mut bv = vec![0.0; basis_len];
        let (values, _, _) = segment.integrate(
            (tests + total) / 2 + 8,
            GRAM_QUADRATURE_TOL,
            0.0,
            tests * basis_len,
            |x, out| {
                chebyshev_values(reduce_local(x), &mut tv);
                chebyshev_values(reduce_full(x), &mut bv);
                for (i, t) in tv.iter().enumerate() {
                    for (k, b) in bv.iter().enumerate() {
                        out[i * basis_len + k] = t * b;
                    }
                }
            },
        )?;
        for row in values.chunks(basis_len) {
            rows.push(row.to_vec());
        }
    }

    let mut matrix = Vec::with_capacity(total * total);
    let mut rhs = Vec::with_capacity(total);
    for row in &rows {
        let scale = row[..total].iter().fold(0.0, |m: f64, v| m.max(v.abs()));
        let scale = if scale > 0.0 { scale } else { 1.0 };
        matrix.extend(row[..total].iter().map(|v| v / scale));
        rhs.push(-row[total] / (lead * scale));
    }

    let context = || format!("P_{{{n},{m}}} with {p:?}");
    let lu = Lu::factor(total, matrix).ok_or_else(|| Error::SingularSystem {
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
    let mut coeffs = lu.solve(&rhs);
    coeffs.push(1.0 / lead);
    let series = ChebyshevSeries {
        lo: p.a,
        hi: 1.0,
        coeffs,
    };
    let monic = MonicPolynomial::from_coeffs(&series.to_monomial());
    Ok(Type2Polynomial {
        monic,
        series,
        condition,
    })
}

/// The monic type II polynomial with `n` conditions on `[a, 0]` and `m` on `[0, 1]`.
pub fn build_type2_polynomial(p: &AngelescoParams, n: usize, m: usize) -> Result<MonicPolynomial> {
    build_type2(p, n, m).map(|t| t.monic)
}

/// Locates the `n` zeros in `(a, 0)` and `m` zeros in `(0, 1)`.
pub fn localize_roots<P: RealPolynomial>(
    poly: &P,
    p: &AngelescoParams,
    n: usize,
    m: usize,
) -> Result<ZeroSet> {
    if poly.degree() != n + m {
        return Err(Error::Config(format!(
            "polynomial degree {} does not match n + m = {}",
            poly.degree(),
            n + m
        )));
    }
    let f = |x: f64| poly.eval(x);
    let negative = roots::localize_in(&f, p.a, 0.0, n)?;
    let positive = roots::localize_in(&f, 0.0, 1.0, m)?;
    Ok(ZeroSet::new(negative, positive))
}

/// Oracle zeros of `P_{n,m}`.
///
/// The zeros of the solved series are polished by Newton on the same
/// conditions in factored form: with many zeros on one interval the series
/// is tiny there and its evaluation cancels. When the solve itself is too
/// ill-conditioned, the start comes from the one-sided problems instead.
pub fn type2_zeros(p: &AngelescoParams, n: usize, m: usize) -> Result<ZeroSet> {
    let p = p.validate()?;
    if n + m == 0 {
        return Ok(ZeroSet::default());
    }
    let left = side_measure(&p, Interval::Left, n)?;
    let right = side_measure(&p, Interval::Right, m)?;
    let start = match build_type2(&p, n, m).and_then(|poly| localize_roots(&poly, &p, n, m)) {
        Ok(zeros) => zeros,
        Err(Error::SingularSystem { .. } | Error::Localization { .. }) => {
            twosided::alternate(&left, &right)?
        }
        Err(e) => return Err(e),
    };
    twosided::polish(&left, &right, start, p.a, 1.0, || {
        format!("polishing P_{{{n},{m}}} with {p:?}")
    })
}

/// One interval's weight on a fixed rule with Chebyshev tests.
fn side_measure(p: &AngelescoParams, interval: Interval, count: usize) -> Result<SideMeasure> {
    let segment = angelesco_segment(p, interval);
    let rule = gauss_rule(4 * count + 96, segment.family)?;
    let mut nodes = Vec::with_capacity(rule.size());
    let mut weights = Vec::with_capacity(rule.size());
    for (t, w) in rule.nodes.iter().zip(&rule.weights) {
        let x = (segment.map)(*t);
        nodes.push(x);
        weights.push(segment.prefactor * w * (segment.smooth)(x));
    }
    let (lo, hi) = match interval {
        Interval::Left => (p.a, 0.0),
        Interval::Right => (0.0, 1.0),
    };
    Ok(SideMeasure::new(nodes, weights, count, |x, out| {
        chebyshev_values((2.0 * x - lo - hi) / (hi - lo), out)
    }))
}

/// Largest `|∫ x^k P w| / ∫ |x^k P| w` over all `n + m` conditions; 0 if
/// there are none.
///
/// Both integrals come from one fixed Gauss rule per interval. Every factor
/// the rule samples is analytic well past its interval, and an adaptive
/// scheme would only chase the rounding noise of a nearly cancelling sum.
pub fn orthogonality_residual<P: RealPolynomial>(
    poly: &P,
    p: &AngelescoParams,
    n: usize,
    m: usize,
) -> Result<f64> {
    let p = p.validate()?;
    let mut worst: f64 = 0.0;
    for (interval, count) in [(Interval::Left, n), (Interval::Right, m)] {
        if count == 0 {
            continue;
        }
        let segment = angelesco_segment(&p, interval);
        let rule = gauss_rule(4 * (n + m).max(poly.degree()) + 64, segment.family)?;
        for k in 0..count {
            let (mut signed, mut absolute) = (0.0, 0.0);
            for (t, w) in rule.nodes.iter().zip(&rule.weights) {
                let x = (segment.map)(*t);
                let v =
                    segment.prefactor * w * (segment.smooth)(x) * x.powi(k as i32) * poly.eval(x);
                signed += v;
                absolute += v.abs();
            }
            if absolute > 0.0 {
                worst = worst.max(signed.abs() / absolute);
            }
        }
    }
    Ok(worst)
}
