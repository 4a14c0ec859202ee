//! Zeros of the diagonal `P_{n,n}` by climbing the Rodrigues ladder.
//!
//! Level `k` holds the `2(k+1)` zeros of `P_{k+1,k+1}` at exponents raised
//! by `n-1-k`. Its zeros are the roots of
//!
//! ```text
//! f(x) = Σ_j 1/(x - z_j) + (α+1)/(x - a) + (β+1)/x - (γ+1)/(1 - x)
//! ```
//!
//! where `z_j` are the zeros of the level below and `(α, β, γ)` the level's
//! own exponents. `f` decreases from `+inf` to `-inf` between consecutive
//! poles, so every bracket holds exactly one root.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::ZeroSet;
use crate::weight::AngelescoParams;

pub const DEFAULT_TOL: f64 = 1e-13;
const MAX_ITERATIONS: usize = 200;
const POLE_GUARD: f64 = 1e-300;
/// Brackets are pulled in by this fraction of their width before the first evaluation.
const SHRINK: f64 = 1.0 / (1u64 << 40) as f64;

/// Consecutive poles of `f`; the root lies strictly between them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CascadeLevel {
    pub k: usize,
    /// Exponents of the polynomial at this level, `(α, β, γ) + (n-1-k)`.
    pub shifted_params: AngelescoParams,
    pub zeros: ZeroSet,
}

fn check_pole(x: f64, pole: f64) -> Result<()> {
    if (x - pole).abs() < POLE_GUARD {
        Err(Error::Pole { x, pole })
    } else {
        Ok(())
    }
}

fn check_poles(x: f64, prev: &ZeroSet, p: &AngelescoParams) -> Result<()> {
    for pole in [p.a, 0.0, 1.0].into_iter().chain(prev.iter()) {
        check_pole(x, pole)?;
    }
    Ok(())
}

/// The rational function whose roots are the next level's zeros.
pub fn f_eval(x: f64, prev_zeros: &ZeroSet, pole_params: &AngelescoParams) -> Result<f64> {
    check_poles(x, prev_zeros, pole_params)?;
    Ok(f_unchecked(x, prev_zeros, pole_params))
}

/// Derivative of [`f_eval`]; strictly negative away from the poles.
pub fn f_derivative(x: f64, prev_zeros: &ZeroSet, pole_params: &AngelescoParams) -> Result<f64> {
    check_poles(x, prev_zeros, pole_params)?;
    Ok(f_and_derivative(x, prev_zeros, pole_params).1)
}

#[inline]
fn f_unchecked(x: f64, prev: &ZeroSet, p: &AngelescoParams) -> f64 {
    let sum: f64 = prev.iter().map(|z| 1.0 / (x - z)).sum();
    sum + (p.alpha + 1.0) / (x - p.a) + (p.beta + 1.0) / x - (p.gamma + 1.0) / (1.0 - x)
}

#[inline]
fn f_and_derivative(x: f64, prev: &ZeroSet, p: &AngelescoParams) -> (f64, f64) {
    let mut f = 0.0;
    let mut df = 0.0;
    for z in prev.iter() {
        let r = 1.0 / (x - z);
        f += r;
        df -= r * r;
    }
    let ra = 1.0 / (x - p.a);
    let r0 = 1.0 / x;
    let r1 = 1.0 / (1.0 - x);
    f += (p.alpha + 1.0) * ra + (p.beta + 1.0) * r0 - (p.gamma + 1.0) * r1;
    df -= (p.alpha + 1.0) * ra * ra + (p.beta + 1.0) * r0 * r0 + (p.gamma + 1.0) * r1 * r1;
    (f, df)
}

/// The unique root of `f` in `b`, by Newton steps safeguarded with bisection.
pub fn solve_in_bracket(
    b: Bracket,
    prev_zeros: &ZeroSet,
    pole_params: &AngelescoParams,
    tol: f64,
) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::Config(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if !(b.lo < b.hi) {
        return Err(Error::Config(format!("empty bracket ({}, {})", b.lo, b.hi)));
    }
    let eps = (b.hi - b.lo) * SHRINK;
    let (mut lo, mut hi) = (b.lo + eps, b.hi - eps);
    let mut x = 0.5 * (lo + hi);
    let eval = |x: f64| -> Result<(f64, f64)> {
        check_poles(x, prev_zeros, pole_params)?;
        Ok(f_and_derivative(x, prev_zeros, pole_params))
    };

    for _ in 0..MAX_ITERATIONS {
        let (fx, dfx) = eval(x)?;
        if fx == 0.0 {
            return Ok(x);
        }
        // f decreases: positive means the root is to the right.
        if fx > 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - fx / dfx;
        let next = if newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if hi - lo <= tol {
            return Ok(0.5 * (lo + hi));
        }
        if (next - x).abs() <= tol {
            // A short step can also happen right next to a pole; confirm the
            // sign change around `next` before accepting it.
            if next - tol > lo && eval(next - tol)?.0 > 0.0 {
                lo = next - tol;
            }
            if next + tol < hi && eval(next + tol)?.0 < 0.0 {
                hi = next + tol;
            }
            if hi - lo <= 2.0 * tol + f64::EPSILON * next.abs() {
                return Ok(next.clamp(lo, hi));
            }
            x = 0.5 * (lo + hi);
            continue;
        }
        x = next;
    }
    Err(Error::SolverIterations {
        lo: b.lo,
        hi: b.hi,
        iterations: MAX_ITERATIONS,
        context: String::new(),
    })
}

/// Poles of the level built on `prev`, ascending: `a`, negative zeros, `0`, positive zeros, `1`.
pub fn brackets(prev: &ZeroSet, a: f64) -> Vec<Bracket> {
    let poles: Vec<f64> = std::iter::once(a)
        .chain(prev.negative.iter().copied())
        .chain(std::iter::once(0.0))
        .chain(prev.positive.iter().copied())
        .chain(std::iter::once(1.0))
        .collect();
    poles
        .windows(2)
        .map(|w| Bracket { lo: w[0], hi: w[1] })
        .collect()
}

/// Every level of the ladder for `P_{n,n}`, from `P_{1,1}` up.
pub fn diagonal_ladder(p: &AngelescoParams, n: usize, tol: f64) -> Result<Vec<CascadeLevel>> {
    let p = p.validate()?;
    if n == 0 {
        return Err(Error::Config("diagonal index n must be at least 1".into()));
    }
    let mut levels: Vec<CascadeLevel> = Vec::with_capacity(n);
    let empty = ZeroSet::default();
    for k in 0..n {
        let shifted = p.shifted((n - 1 - k) as f64);
        let prev = levels.last().map_or(&empty, |l| &l.zeros);
        let mut roots = Vec::with_capacity(2 * k + 2);
        for b in brackets(prev, p.a) {
            let root = solve_in_bracket(b, prev, &shifted, tol).map_err(|e| match e {
                Error::SolverIterations {
                    lo, hi, iterations, ..
                } => Error::SolverIterations {
                    lo,
                    hi,
                    iterations,
                    context: format!(" at ladder level {k} of n = {n}"),
                },
                other => other,
            })?;
            roots.push(root);
        }
        let positive = roots.split_off(k + 1);
        levels.push(CascadeLevel {
            k,
            shifted_params: shifted,
            zeros: ZeroSet::new(roots, positive),
        });
    }
    Ok(levels)
}

/// The `2n` zeros of `P_{n,n}^{(α,β,γ)}(x; a)`.
pub fn diagonal_zeros(p: &AngelescoParams, n: usize, tol: f64) -> Result<ZeroSet> {
    let mut levels = diagonal_ladder(p, n, tol)?;
    Ok(levels.pop().expect("n >= 1 gives at least one level").zeros)
}

/// Smallest gap in the interlacing of a level (`k+1` zeros per side) with the
/// level below (`k` per side). Positive iff both sides interlace strictly.
pub fn interlacing_margin(upper: &ZeroSet, lower: &ZeroSet) -> f64 {
    fn side(outer: &[f64], inner: &[f64]) -> f64 {
        if outer.len() != inner.len() + 1 {
            return f64::NEG_INFINITY;
        }
        inner
            .iter()
            .enumerate()
            .map(|(j, y)| (y - outer[j]).min(outer[j + 1] - y))
            .fold(f64::INFINITY, f64::min)
    }
    side(&upper.negative, &lower.negative).min(side(&upper.positive, &lower.positive))
}

/// Largest Newton correction `|f/f'|` at the returned zeros, an a posteriori error estimate.
pub fn newton_correction(level: &CascadeLevel, prev: &ZeroSet) -> f64 {
    level
        .zeros
        .iter()
        .map(|z| {
            let (f, df) = f_and_derivative(z, prev, &level.shifted_params);
            (f / df).abs()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn params(a: f64, alpha: f64, beta: f64, gamma: f64) -> AngelescoParams {
        AngelescoParams::new(a, alpha, beta, gamma).unwrap()
    }

    fn no_zeros() -> ZeroSet {
        ZeroSet::default()
    }

    #[test]
    fn f_values() {
        let p = params(-1.0, 0.0, 0.0, 0.0);
        assert_abs_diff_eq!(
            f_eval(0.5, &no_zeros(), &p).unwrap(),
            1.0 / 1.5,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            f_eval(1.0 / 3f64.sqrt(), &no_zeros(), &p).unwrap(),
            0.0,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            f_eval(0.9, &no_zeros(), &p).unwrap(),
            1.0 / 1.9 + 1.0 / 0.9 - 10.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            f_eval(0.9, &no_zeros(), &p).unwrap(),
            -8.362_573_099_415_2,
            epsilon = 1e-10
        );
        assert!(matches!(
            f_eval(0.0, &no_zeros(), &p),
            Err(Error::Pole { .. })
        ));
        let prev = ZeroSet::new(vec![-0.3], vec![0.3]);
        assert!(matches!(f_eval(0.3, &prev, &p), Err(Error::Pole { .. })));
    }

    #[test]
    fn derivative_values() {
        let p = params(-1.0, 0.0, 0.0, 0.0);
        assert_abs_diff_eq!(
            f_derivative(0.5, &no_zeros(), &p).unwrap(),
            -(1.0 / 2.25 + 8.0),
            epsilon = 1e-14
        );
        let prev = ZeroSet::new(vec![-0.6, -0.2], vec![0.1, 0.7]);
        let p = params(-1.3, 0.5, -0.5, 2.0);
        let x = 0.3;
        let h = 1e-7;
        let fd =
            (f_eval(x + h, &prev, &p).unwrap() - f_eval(x - h, &prev, &p).unwrap()) / (2.0 * h);
        let exact = f_derivative(x, &prev, &p).unwrap();
        assert!(exact < 0.0);
        assert!((fd - exact).abs() <= 1e-6 * exact.abs(), "{fd} vs {exact}");
    }

    #[test]
    fn bracket_solves() {
        let p = params(-1.0, 0.0, 0.0, 0.0);
        let r = 1.0 / 3f64.sqrt();
        let z = solve_in_bracket(Bracket { lo: 0.0, hi: 1.0 }, &no_zeros(), &p, 1e-13).unwrap();
        assert_abs_diff_eq!(z, r, epsilon = 1e-13);
        let z = solve_in_bracket(Bracket { lo: -1.0, hi: 0.0 }, &no_zeros(), &p, 1e-13).unwrap();
        assert_abs_diff_eq!(z, -r, epsilon = 1e-13);
        // 0.5 + x - 3x^2 = 0
        let p = params(-0.5, 0.0, 0.0, 0.0);
        let z = solve_in_bracket(Bracket { lo: 0.0, hi: 1.0 }, &no_zeros(), &p, 1e-13).unwrap();
        assert_abs_diff_eq!(z, (1.0 + 7f64.sqrt()) / 6.0, epsilon = 1e-13);
    }

    #[test]
    fn bracket_errors() {
        let p = params(-1.0, 0.0, 0.0, 0.0);
        assert!(solve_in_bracket(Bracket { lo: 0.0, hi: 1.0 }, &no_zeros(), &p, 0.0).is_err());
        assert!(solve_in_bracket(Bracket { lo: 1.0, hi: 0.0 }, &no_zeros(), &p, 1e-13).is_err());
    }

    #[test]
    fn ladder_closed_forms() {
        let r = 1.0 / 3f64.sqrt();
        let z = diagonal_zeros(&params(-1.0, 0.0, 0.0, 0.0), 1, DEFAULT_TOL).unwrap();
        assert_abs_diff_eq!(z.negative[0], -r, epsilon = 1e-12);
        assert_abs_diff_eq!(z.positive[0], r, epsilon = 1e-12);
        let z = diagonal_zeros(&params(-1.0, 0.0, 1.0, 0.0), 1, DEFAULT_TOL).unwrap();
        assert_abs_diff_eq!(z.positive[0], 0.5f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(z.negative[0], -(0.5f64.sqrt()), epsilon = 1e-12);
        assert!(diagonal_zeros(&params(-1.0, 0.0, 0.0, 0.0), 0, DEFAULT_TOL).is_err());
    }

    #[test]
    fn second_level_brackets_and_oracle() {
        let p = params(-1.0, 0.0, 0.0, 0.0);
        let ladder = diagonal_ladder(&p, 2, DEFAULT_TOL).unwrap();
        assert_eq!(ladder.len(), 2);
        assert_eq!(ladder[0].shifted_params, p.shifted(1.0));
        let lower = &ladder[0].zeros;
        let upper = &ladder[1].zeros;
        assert_eq!(upper.counts(), (2, 2));
        let bs = brackets(lower, p.a);
        for (b, z) in bs.iter().zip(upper.iter()) {
            assert!(b.lo < z && z < b.hi);
        }
        assert!(interlacing_margin(upper, lower) > 0.0);
        let oracle = crate::gram::type2_zeros(&p, 2, 2).unwrap();
        assert!(upper.max_distance(&oracle) <= 1e-8);
    }

    #[test]
    fn interlacing_margin_detects_violation() {
        let upper = ZeroSet::new(vec![-0.8, -0.2], vec![0.2, 0.8]);
        let lower = ZeroSet::new(vec![-0.5], vec![0.5]);
        assert!(interlacing_margin(&upper, &lower) > 0.0);
        let bad = ZeroSet::new(vec![-0.1], vec![0.5]);
        assert!(interlacing_margin(&upper, &bad) < 0.0);
        assert_eq!(interlacing_margin(&upper, &upper), f64::NEG_INFINITY);
    }

    fn exponent() -> impl Strategy<Value = f64> {
        -0.95f64..4.0
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn f_decreases_on_brackets(a in -3.0f64..-0.1, al in exponent(), be in exponent(),
                                   ga in exponent(), n in 1usize..5) {
            let p = params(a, al, be, ga);
            let ladder = diagonal_ladder(&p, n, DEFAULT_TOL).unwrap();
            let top = ladder.last().unwrap();
            let prev = if n > 1 { ladder[n - 2].zeros.clone() } else { ZeroSet::default() };
            for b in brackets(&prev, a) {
                let w = b.hi - b.lo;
                let f1 = f_eval(b.lo + 0.25 * w, &prev, &top.shifted_params).unwrap();
                let f3 = f_eval(b.lo + 0.75 * w, &prev, &top.shifted_params).unwrap();
                prop_assert!(f1 > f3);
            }
        }

        #[test]
        fn roots_change_sign(a in -3.0f64..-0.1, al in exponent(), be in exponent(),
                             ga in exponent(), n in 1usize..6) {
            let p = params(a, al, be, ga);
            let tol = DEFAULT_TOL;
            let ladder = diagonal_ladder(&p, n, tol).unwrap();
            for (i, level) in ladder.iter().enumerate() {
                let prev = if i > 0 { ladder[i - 1].zeros.clone() } else { ZeroSet::default() };
                for (b, z) in brackets(&prev, a).iter().zip(level.zeros.iter()) {
                    prop_assert!(b.lo < z && z < b.hi);
                    let eps = 10.0 * tol;
                    if z - eps > b.lo && z + eps < b.hi {
                        prop_assert!(f_eval(z - eps, &prev, &level.shifted_params).unwrap() > 0.0);
                        prop_assert!(f_eval(z + eps, &prev, &level.shifted_params).unwrap() < 0.0);
                    }
                }
                if i > 0 {
                    prop_assert!(interlacing_margin(&level.zeros, &prev) > 0.0);
                }
            }
        }
    }
}
