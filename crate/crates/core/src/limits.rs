//! Jacobi-Laguerre and Laguerre-Hermite multiple orthogonal polynomials,
//! built from their own orthogonality conditions, and the scaling limits
//! that connect them to the Jacobi-Angelesco family:
//!
//! ```text
//! L_{n,m}(x; a) = lim_{γ→∞} γ^{n+m} P_{n,m}^{(α,β,γ)}(x/γ; a/γ)
//! H_{n,m}(x)    = lim_{A→∞} A^{(n+m)/2} P_{n,m}^{(A,β,A)}(x/√A; -1)
//! ```

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::cascade::{diagonal_zeros, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::gram::chebyshev_values;
use crate::linalg::solve_row_scaled;
use crate::polynomial::{MonicPolynomial, RealPolynomial, ZeroSet};
use crate::quadrature::{gamma_positive, gauss_rule, Family, QuadratureRule, Segment};
use crate::report::{directional_margin, step_grid, Case, VerificationReport};
use crate::roots;
use crate::twosided::{self, SideMeasure};
use crate::weight::AngelescoParams;

const JL_QUADRATURE_TOL: f64 = 1e-13;

/// Above this total degree the Laguerre-Hermite system switches from
/// monomials to monic Hermite polynomials.
pub const LH_MONOMIAL_MAX_DEGREE: usize = 8;

/// Weights `(x - a)^α |x|^β e^{-x}` on `[a, 0]` and `[0, inf)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiLaguerreParams {
    pub a: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl JacobiLaguerreParams {
    pub fn new(a: f64, alpha: f64, beta: f64) -> Result<Self> {
        // Same constraints as the Angelesco system with γ = 0.
        AngelescoParams::new(a, alpha, beta, 0.0)?;
        Ok(Self { a, alpha, beta })
    }
}

/// Weight `|x|^β e^{-x^2}` on both half-lines.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaguerreHermiteParams {
    pub beta: f64,
}

impl LaguerreHermiteParams {
    pub fn new(beta: f64) -> Result<Self> {
        if !(beta > -1.0) || !beta.is_finite() {
            return Err(Error::InvalidParam {
                field: "beta",
                message: "must exceed -1",
                value: beta,
            });
        }
        Ok(Self { beta })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Negative,
    Positive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitCheckResult {
    pub scale_values: Vec<f64>,
    /// Max absolute zero distance at each scale.
    pub errors: Vec<f64>,
    /// `errors[i+1] / errors[i]`.
    pub ratios: Vec<f64>,
}

impl LimitCheckResult {
    fn from_errors(scale_values: Vec<f64>, errors: Vec<f64>) -> Self {
        let ratios = errors.windows(2).map(|w| w[1] / w[0]).collect();
        Self {
            scale_values,
            errors,
            ratios,
        }
    }

    pub fn strictly_decreasing(&self) -> bool {
        self.errors.windows(2).all(|w| w[1] < w[0])
    }
}

/// `∫ x^k |x|^β e^{-x^2}` over one half-line: `±½ Γ((k+β+1)/2)`.
pub fn lh_moment(k: usize, beta: f64, side: Side) -> f64 {
    let value = 0.5 * gamma_positive((k as f64 + beta + 1.0) / 2.0);
    match side {
        Side::Positive => value,
        Side::Negative if k % 2 == 1 => -value,
        Side::Negative => value,
    }
}

fn poly_mul_x(p: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0];
    out.extend_from_slice(p);
    out
}

fn axpy(y: &mut Vec<f64>, a: f64, x: &[f64]) {
    if y.len() < x.len() {
        y.resize(x.len(), 0.0);
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

/// Monomial coefficient vectors of the basis used for the LH system.
fn lh_basis(total: usize) -> Vec<Vec<f64>> {
    if total <= LH_MONOMIAL_MAX_DEGREE {
        return (0..=total)
            .map(|k| {
                let mut v = vec![0.0; k + 1];
                v[k] = 1.0;
                v
            })
            .collect();
    }
    // Monic Hermite for e^{-x^2}: h_{k+1} = x h_k - (k/2) h_{k-1}.
    let mut basis: Vec<Vec<f64>> = vec![vec![1.0], vec![0.0, 1.0]];
    for k in 1..total {
        let mut next = poly_mul_x(&basis[k]);
        axpy(&mut next, -(k as f64) / 2.0, &basis[k - 1]);
        basis.push(next);
    }
    basis.truncate(total + 1);
    basis
}

/// `∫ u v |x|^β e^{-x^2}` on one side from exact moments.
fn lh_inner(u: &[f64], v: &[f64], beta: f64, side: Side) -> f64 {
    let mut s = 0.0;
    for (i, ui) in u.iter().enumerate() {
        if *ui == 0.0 {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            if *vj != 0.0 {
                s += ui * vj * lh_moment(i + j, beta, side);
            }
        }
    }
    s
}

/// Laguerre-Hermite `H_{n,m}^{(β)}` and its zeros.
pub fn lh_build(
    p: &LaguerreHermiteParams,
    n: usize,
    m: usize,
) -> Result<(MonicPolynomial, ZeroSet)> {
    let p = LaguerreHermiteParams::new(p.beta)?;
    let total = n + m;
    if total == 0 {
        return Err(Error::Config("n + m must be at least 1".into()));
    }
    let basis = lh_basis(total);
    let mut rows = Vec::with_capacity(total);
    for (side, count) in [(Side::Negative, n), (Side::Positive, m)] {
        for test in basis.iter().take(count) {
            let row: Vec<f64> = basis
                .iter()
                .map(|b| lh_inner(test, b, p.beta, side))
                .collect();
            rows.push(row);
        }
    }
    let coeffs = solve_row_scaled(rows, total, || {
        format!("H_{{{n},{m}}} with beta = {}", p.beta)
    })?;
    let mut mono = basis[total].clone();
    for (c, b) in coeffs.iter().zip(&basis) {
        axpy(&mut mono, *c, b);
    }
    let poly = MonicPolynomial::from_coeffs(&mono);
    let window = 4.0 * total as f64 + 8.0;
    let f = |x: f64| poly.eval(x);
    let negative = roots::localize_half_line(&f, window, n, true)?;
    let positive = roots::localize_half_line(&f, window, m, false)?;
    Ok((poly, ZeroSet::new(negative, positive)))
}

/// Orthonormal Laguerre polynomials for `x^β e^{-x}` plus the monic one of top degree.
#[derive(Debug, Clone)]
struct LaguerreBasis {
    beta: f64,
    norms: Vec<f64>,
}

impl LaguerreBasis {
    fn new(beta: f64, top: usize) -> Self {
        // ||π_k||^2 = k! Γ(k+β+1) for the monic polynomials.
        let mut norms = Vec::with_capacity(top + 1);
        let mut sq = gamma_positive(beta + 1.0);
        for k in 0..=top {
            if k > 0 {
                sq *= k as f64 * (k as f64 + beta);
            }
            norms.push(sq.sqrt());
        }
        Self { beta, norms }
    }

    /// Values `π_k(x)/||π_k||` for `k < out.len() - 1` and the monic `π_top(x)` last.
    fn values(&self, x: f64, out: &mut [f64]) {
        let top = out.len() - 1;
        let (mut prev, mut cur) = (0.0, 1.0);
        for (k, o) in out.iter_mut().enumerate() {
            *o = if k == top { cur } else { cur / self.norms[k] };
            let kf = k as f64;
            let next = (x - (2.0 * kf + self.beta + 1.0)) * cur - kf * (kf + self.beta) * prev;
            prev = cur;
            cur = next;
        }
    }

    fn monomials(&self, top: usize) -> Vec<Vec<f64>> {
        let mut monic: Vec<Vec<f64>> = vec![vec![1.0]];
        let mut prev: Vec<f64> = Vec::new();
        for k in 0..top {
            let kf = k as f64;
            let cur = monic[k].clone();
            let mut next = poly_mul_x(&cur);
            axpy(&mut next, -(2.0 * kf + self.beta + 1.0), &cur);
            axpy(&mut next, -kf * (kf + self.beta), &prev);
            prev = cur;
            monic.push(next);
        }
        monic
            .into_iter()
            .enumerate()
            .map(|(k, v)| {
                if k == top {
                    v
                } else {
                    v.iter().map(|c| c / self.norms[k]).collect()
                }
            })
            .collect()
    }
}

/// A Jacobi-Laguerre polynomial in its solved basis.
#[derive(Debug, Clone)]
pub struct JacobiLaguerrePolynomial {
    pub monic: MonicPolynomial,
    basis: LaguerreBasis,
    coeffs: Vec<f64>,
}

impl RealPolynomial for JacobiLaguerrePolynomial {
    fn degree(&self) -> usize {
        self.coeffs.len()
    }

    fn eval(&self, x: f64) -> f64 {
        let mut vals = vec![0.0; self.coeffs.len() + 1];
        self.basis.values(x, &mut vals);
        let top = vals[self.coeffs.len()];
        self.coeffs
            .iter()
            .zip(&vals)
            .map(|(c, v)| c * v)
            .sum::<f64>()
            + top
    }
}

type BoxedFn = Box<dyn Fn(f64) -> f64 + Sync>;
type Piece = (Segment<BoxedFn, BoxedFn>, QuadratureRule);

/// Quadrature pieces for one JL interval. `[a, 0]` goes through
/// `jacobi(β, α)` with `e^{-x}` sampled. The half-line is cut at `cut`:
/// `(x - a)^α` has a branch point at distance `|a|` from the origin, which
/// stalls Gauss-Laguerre for fractional α, so `[0, cut]` uses `jacobi(0, β)`
/// and only the tail, far from the branch point, uses `laguerre(0)`.
fn jl_pieces(p: &JacobiLaguerreParams, negative: bool, cut: f64) -> Vec<Segment<BoxedFn, BoxedFn>> {
    let JacobiLaguerreParams { a, alpha, beta } = *p;
    if negative {
        return vec![Segment {
            family: Family::Jacobi { p: beta, q: alpha },
            prefactor: (-a / 2.0).powf(alpha + beta + 1.0),
            map: Box::new(move |t| a * (1.0 - t) / 2.0),
            smooth: Box::new(|x: f64| (-x).exp()),
        }];
    }
    vec![
        Segment {
            family: Family::Jacobi { p: 0.0, q: beta },
            prefactor: (cut / 2.0).powf(beta + 1.0),
            map: Box::new(move |t| cut * (1.0 + t) / 2.0),
            smooth: Box::new(move |x: f64| (x - a).powf(alpha) * (-x).exp()),
        },
        Segment {
            family: Family::Laguerre { p: 0.0 },
            prefactor: (-cut).exp(),
            map: Box::new(move |t| cut + t),
            smooth: Box::new(move |x: f64| x.powf(beta) * (x - a).powf(alpha)),
        },
    ]
}

fn half_line_cut(total: usize) -> f64 {
    total as f64 + 4.0
}

/// Builds `L_{n,m}^{(α,β)}(x; a)` in its solved basis.
pub fn jl_build_polynomial(
    p: &JacobiLaguerreParams,
    n: usize,
    m: usize,
) -> Result<JacobiLaguerrePolynomial> {
    let p = JacobiLaguerreParams::new(p.a, p.alpha, p.beta)?;
    let total = n + m;
    if total == 0 {
        return Err(Error::Config("n + m must be at least 1".into()));
    }
    let basis = LaguerreBasis::new(p.beta, total);
    let basis_len = total + 1;
    let mut rows = Vec::with_capacity(total);
    for (negative, count) in [(true, n), (false, m)] {
        if count == 0 {
            continue;
        }
        let mut tv = vec![0.0; count];
        let mut bv = vec![0.0; basis_len];
        let mut lag = vec![0.0; count + 1];
        let mut values = vec![0.0; count * basis_len];
        for segment in jl_pieces(&p, negative, half_line_cut(total)) {
            let (piece, _, _) = segment.integrate(
                (count + total) / 2 + 8,
                JL_QUADRATURE_TOL,
                0.0,
                count * basis_len,
                |x, out| {
                    if negative {
                        chebyshev_values((2.0 * x - p.a) / -p.a, &mut tv);
                    } else {
                        // Orthonormal Laguerre tests; the monic top slot is unused.
                        basis.values(x, &mut lag);
                        tv.copy_from_slice(&lag[..count]);
                    }
                    basis.values(x, &mut bv);
                    for (i, t) in tv.iter().enumerate() {
                        for (k, b) in bv.iter().enumerate() {
                            out[i * basis_len + k] = t * b;
                        }
                    }
                },
            )?;
            values.iter_mut().zip(piece).for_each(|(v, w)| *v += w);
        }
        rows.extend(values.chunks(basis_len).map(|r| r.to_vec()));
    }
    let coeffs = solve_row_scaled(rows, total, || format!("L_{{{n},{m}}} with {p:?}"))?;
    let monomials = basis.monomials(total);
    let mut mono = monomials[total].clone();
    for (c, b) in coeffs.iter().zip(&monomials) {
        axpy(&mut mono, *c, b);
    }
    Ok(JacobiLaguerrePolynomial {
        monic: MonicPolynomial::from_coeffs(&mono),
        basis,
        coeffs,
    })
}

/// Jacobi-Laguerre `L_{n,m}^{(α,β)}(x; a)` and its zeros.
pub fn jl_build(
    p: &JacobiLaguerreParams,
    n: usize,
    m: usize,
) -> Result<(MonicPolynomial, ZeroSet)> {
    let p = JacobiLaguerreParams::new(p.a, p.alpha, p.beta)?;
    if n + m == 0 {
        return Err(Error::Config("n + m must be at least 1".into()));
    }
    let total = n + m;
    let left = jl_side(&p, true, n, total)?;
    let right = jl_side(&p, false, m, total)?;
    let start = twosided::alternate(&left, &right)?;
    let zeros = twosided::polish(&left, &right, start, p.a, f64::INFINITY, || {
        format!("L_{{{n},{m}}} with {p:?}")
    })?;
    Ok((MonicPolynomial::from_roots(&zeros.all()), zeros))
}

/// One side's weight on its fixed rules, with Chebyshev tests on `[a, 0]`
/// and orthonormal Laguerre tests on the half-line.
fn jl_side(
    p: &JacobiLaguerreParams,
    negative: bool,
    count: usize,
    total: usize,
) -> Result<SideMeasure> {
    let (mut nodes, mut weights) = (Vec::new(), Vec::new());
    for (piece, rule) in jl_rules(p, negative, total)? {
        for (t, w) in rule.nodes.iter().zip(&rule.weights) {
            let x = (piece.map)(*t);
            nodes.push(x);
            weights.push(piece.prefactor * w * (piece.smooth)(x));
        }
    }
    let a = p.a;
    let laguerre = LaguerreBasis::new(p.beta, count);
    let mut scratch = vec![0.0; count + 1];
    Ok(SideMeasure::new(nodes, weights, count, |x, out| {
        if negative {
            chebyshev_values((2.0 * x - a) / -a, out);
        } else {
            laguerre.values(x, &mut scratch);
            out.copy_from_slice(&scratch[..count]);
        }
    }))
}

/// Fixed rules for every piece of one side, large enough for the residual
/// and Newton integrals at total degree `total`.
fn jl_rules(p: &JacobiLaguerreParams, negative: bool, total: usize) -> Result<Vec<Piece>> {
    jl_pieces(p, negative, half_line_cut(total))
        .into_iter()
        .map(|piece| {
            let rule = gauss_rule(4 * total + 64, piece.family)?;
            Ok((piece, rule))
        })
        .collect()
}

/// `n` zeros in `(a, 0)` and `m` in `(0, inf)`.
pub fn jl_localize<P: RealPolynomial>(
    poly: &P,
    p: &JacobiLaguerreParams,
    n: usize,
    m: usize,
) -> Result<ZeroSet> {
    let f = |x: f64| poly.eval(x);
    let negative = roots::localize_in(&f, p.a, 0.0, n)?;
    let positive = roots::localize_half_line(&f, 4.0 * (n + m) as f64 + 8.0, m, false)?;
    Ok(ZeroSet::new(negative, positive))
}

/// Largest `|∫ x^k H w| / Σ_j |c_j| |∫ x^{j+k} w|` over the `n + m` conditions,
/// using the exact moments. The denominator bounds `∫ |x^k H| w` from above.
pub fn lh_orthogonality_residual(poly: &MonicPolynomial, beta: f64, n: usize, m: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for (side, count) in [(Side::Negative, n), (Side::Positive, m)] {
        for k in 0..count {
            let (mut signed, mut bound) = (0.0, 0.0);
            for (j, c) in poly.coeffs().iter().enumerate() {
                let v = c * lh_moment(j + k, beta, side);
                signed += v;
                bound += v.abs();
            }
            if bound > 0.0 {
                worst = worst.max(signed.abs() / bound);
            }
        }
    }
    worst
}

/// Largest normalized orthogonality integral `|∫ x^k L w| / ∫ |x^k L| w`.
///
/// Fixed rules suffice here: every sampled factor is analytic near its piece.
pub fn jl_orthogonality_residual<P: RealPolynomial>(
    poly: &P,
    p: &JacobiLaguerreParams,
    n: usize,
    m: usize,
) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (negative, count) in [(true, n), (false, m)] {
        if count == 0 {
            continue;
        }
        let rules = jl_rules(p, negative, poly.degree().max(n + m))?;
        for k in 0..count {
            let (mut signed, mut absolute) = (0.0, 0.0);
            for (piece, rule) in &rules {
                for (t, w) in rule.nodes.iter().zip(&rule.weights) {
                    let x = (piece.map)(*t);
                    let v =
                        piece.prefactor * w * (piece.smooth)(x) * x.powi(k as i32) * poly.eval(x);
                    signed += v;
                    absolute += v.abs();
                }
            }
            if absolute > 0.0 {
                worst = worst.max(signed.abs() / absolute);
            }
        }
    }
    Ok(worst)
}

/// Compares `γ ·` (JA zeros with endpoint `a/γ`, exponent `γ`) against the JL zeros.
pub fn limit_check_jl(
    alpha: f64,
    beta: f64,
    a: f64,
    n: usize,
    gamma_values: &[f64],
) -> Result<LimitCheckResult> {
    check_scales(gamma_values)?;
    let reference = jl_build(&JacobiLaguerreParams::new(a, alpha, beta)?, n, n)?.1;
    let errors = gamma_values
        .par_iter()
        .map(|&g| {
            let p = AngelescoParams::new(a / g, alpha, beta, g)?;
            let zeros = diagonal_zeros(&p, n, DEFAULT_TOL)?.scaled(g);
            Ok(zeros.max_distance(&reference))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(LimitCheckResult::from_errors(gamma_values.to_vec(), errors))
}

/// Compares `√A ·` (JA zeros at `(a, α, β, γ) = (-1, A, β, A)`) against the LH zeros.
pub fn limit_check_lh(beta: f64, n: usize, alpha_values: &[f64]) -> Result<LimitCheckResult> {
    check_scales(alpha_values)?;
    let reference = lh_build(&LaguerreHermiteParams::new(beta)?, n, n)?.1;
    let errors = alpha_values
        .par_iter()
        .map(|&big| {
            let p = AngelescoParams::new(-1.0, big, beta, big)?;
            let zeros = diagonal_zeros(&p, n, DEFAULT_TOL)?.scaled(big.sqrt());
            Ok(zeros.max_distance(&reference))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(LimitCheckResult::from_errors(alpha_values.to_vec(), errors))
}

fn check_scales(values: &[f64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::Config("at least one scale value is required".into()));
    }
    if values.iter().any(|v| !(*v > 0.0)) || values.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::Config(
            "scale values must be positive and ascending".into(),
        ));
    }
    Ok(())
}

/// Parameter grids for the corollary sweeps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorollaryGrid {
    pub jl_a: f64,
    pub jl_alphas: Vec<f64>,
    pub jl_betas: Vec<f64>,
    pub lh_betas: Vec<f64>,
}

impl Default for CorollaryGrid {
    fn default() -> Self {
        Self {
            jl_a: -1.0,
            jl_alphas: step_grid(0.0, 3.0, 0.5),
            jl_betas: vec![0.0, 1.0],
            lh_betas: step_grid(0.0, 3.0, 0.1),
        }
    }
}

/// Monotonicity of JL zeros in α and LH zeros in β over the default grid.
pub fn corollary_checks(n_max: usize) -> Result<VerificationReport> {
    corollary_checks_with(n_max, &CorollaryGrid::default())
}

pub fn corollary_checks_with(n_max: usize, grid: &CorollaryGrid) -> Result<VerificationReport> {
    if n_max == 0 {
        return Err(Error::Config("n_max must be at least 1".into()));
    }
    let start = std::time::Instant::now();
    let mut jobs: Vec<(usize, Option<f64>)> = Vec::new();
    for n in 1..=n_max {
        for &beta in &grid.jl_betas {
            jobs.push((n, Some(beta)));
        }
        jobs.push((n, None));
    }
    let cases: Vec<Case> = jobs
        .par_iter()
        .map(|&(n, jl_beta)| match jl_beta {
            Some(beta) => jl_alpha_case(n, beta, grid),
            None => lh_beta_case(n, grid),
        })
        .collect();
    Ok(VerificationReport::new(
        "corollaries",
        serde_json::to_value(grid).unwrap_or_default(),
        cases,
        start.elapsed().as_secs_f64(),
    ))
}

fn trajectories<F>(values: &[f64], build: F) -> Result<Vec<Vec<f64>>>
where
    F: Fn(f64) -> Result<ZeroSet>,
{
    values.iter().map(|&v| build(v).map(|z| z.all())).collect()
}

fn column(rows: &[Vec<f64>], j: usize) -> Vec<f64> {
    rows.iter().map(|r| r[j]).collect()
}

fn jl_alpha_case(n: usize, beta: f64, grid: &CorollaryGrid) -> Case {
    let inputs = json!({"family": "jacobi-laguerre", "n": n, "a": grid.jl_a, "beta": beta, "swept": "alpha"});
    let rows = trajectories(&grid.jl_alphas, |alpha| {
        let p = JacobiLaguerreParams::new(grid.jl_a, alpha, beta)?;
        Ok(jl_build(&p, n, n)?.1)
    });
    match rows {
        Ok(rows) => {
            let margin = (0..2 * n)
                .map(|j| directional_margin(&column(&rows, j), true))
                .fold(f64::INFINITY, f64::min);
            Case::from_margin(
                inputs,
                margin - crate::report::MONOTONE_MARGIN,
                format!(
                    "all {} zeros increase in alpha; smallest step {margin:e}",
                    2 * n
                ),
            )
        }
        Err(e) => Case::failure(inputs, e.to_string()),
    }
}

fn lh_beta_case(n: usize, grid: &CorollaryGrid) -> Case {
    let inputs = json!({"family": "laguerre-hermite", "n": n, "swept": "beta"});
    let rows = trajectories(&grid.lh_betas, |beta| {
        Ok(lh_build(&LaguerreHermiteParams::new(beta)?, n, n)?.1)
    });
    match rows {
        Ok(rows) => {
            let margin = (0..2 * n)
                .map(|j| directional_margin(&column(&rows, j), j >= n))
                .fold(f64::INFINITY, f64::min);
            Case::from_margin(
                inputs,
                margin - crate::report::MONOTONE_MARGIN,
                format!(
                    "negative zeros decrease, positive increase in beta; smallest step {margin:e}"
                ),
            )
        }
        Err(e) => Case::failure(inputs, e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::RootProduct;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn moments() {
        assert_abs_diff_eq!(
            lh_moment(0, 0.0, Side::Positive),
            PI.sqrt() / 2.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            lh_moment(2, 0.0, Side::Positive),
            PI.sqrt() / 4.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(lh_moment(1, 0.0, Side::Negative), -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(
            lh_moment(2, 0.0, Side::Negative),
            PI.sqrt() / 4.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn moment_recurrence() {
        for beta in [-0.5, 0.0, 0.7, 3.0] {
            for k in 0..20 {
                let lhs = lh_moment(k + 2, beta, Side::Positive);
                let rhs = (k as f64 + beta + 1.0) / 2.0 * lh_moment(k, beta, Side::Positive);
                assert!((lhs / rhs - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn lh_closed_forms() {
        let (poly, z) = lh_build(&LaguerreHermiteParams::new(0.0).unwrap(), 1, 1).unwrap();
        assert_abs_diff_eq!(poly.coeffs()[0], -0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(poly.coeffs()[1], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(z.positive[0], 0.5f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(z.negative[0], -(0.5f64.sqrt()), epsilon = 1e-12);
        let (_, z) = lh_build(&LaguerreHermiteParams::new(1.0).unwrap(), 1, 1).unwrap();
        assert_abs_diff_eq!(z.positive[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(z.negative[0], -1.0, epsilon = 1e-12);
    }

    #[test]
    fn lh_symmetry_both_bases() {
        for beta in [0.0, 0.5, 2.0] {
            for n in [2, 3, 4, 5, 6] {
                let (_, z) = lh_build(&LaguerreHermiteParams::new(beta).unwrap(), n, n).unwrap();
                assert_eq!(z.counts(), (n, n));
                assert!(
                    z.symmetry_defect() <= 1e-10,
                    "beta {beta} n {n}: {}",
                    z.symmetry_defect()
                );
            }
        }
    }

    #[test]
    fn lh_bases_agree_at_switch() {
        // Degree 8 is solved in monomials; compare against the Hermite basis directly.
        let p = LaguerreHermiteParams::new(0.5).unwrap();
        let (mono_poly, _) = lh_build(&p, 4, 4).unwrap();
        let basis = lh_basis(9);
        assert_eq!(basis[9].len(), 10);
        let (_, z) = lh_build(&p, 5, 4).unwrap();
        assert_eq!(z.counts(), (5, 4));
        assert_eq!(*mono_poly.coeffs().last().unwrap(), 1.0);
    }

    #[test]
    fn jl_closed_form_and_counts() {
        let p = JacobiLaguerreParams::new(-1.0, 0.0, 0.0).unwrap();
        let (poly, z) = jl_build(&p, 0, 1).unwrap();
        assert_abs_diff_eq!(poly.coeffs()[0], -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(z.positive[0], 1.0, epsilon = 1e-12);
        let (_, z) = jl_build(&p, 1, 0).unwrap();
        assert!(z.negative[0] > -1.0 && z.negative[0] < 0.0);
        let (_, z) = jl_build(&p, 1, 1).unwrap();
        assert!(z.negative[0] > -1.0 && z.negative[0] < 0.0 && z.positive[0] > 0.0);
    }

    #[test]
    fn lh_residual_of_exact_and_perturbed() {
        let (poly, _) = lh_build(&LaguerreHermiteParams::new(0.5).unwrap(), 3, 3).unwrap();
        assert!(lh_orthogonality_residual(&poly, 0.5, 3, 3) <= 1e-12);
        let mut c = poly.coeffs().to_vec();
        c[0] += 1e-3;
        let bumped = MonicPolynomial::from_coeffs(&c);
        assert!(lh_orthogonality_residual(&bumped, 0.5, 3, 3) > 1e-6);
    }

    #[test]
    fn alternating_zeros_match_the_linear_solve() {
        for (a, alpha, beta) in [(-1.0, 0.0, 0.0), (-2.0, 0.5, 1.0), (-0.5, 2.0, -0.5)] {
            let p = JacobiLaguerreParams::new(a, alpha, beta).unwrap();
            for (n, m) in [(1, 0), (0, 2), (2, 2), (3, 1), (1, 4)] {
                let poly = jl_build_polynomial(&p, n, m).unwrap();
                let linear = jl_localize(&poly, &p, n, m).unwrap();
                let (_, zeros) = jl_build(&p, n, m).unwrap();
                assert!(zeros.max_distance(&linear) <= 1e-9, "{p:?} ({n},{m})");
            }
        }
    }

    #[test]
    fn crowded_left_side_stays_accurate() {
        let p = JacobiLaguerreParams::new(-0.25, 0.5, 2.0).unwrap();
        let (_, zeros) = jl_build(&p, 8, 0).unwrap();
        assert_eq!(zeros.counts(), (8, 0));
        let r = jl_orthogonality_residual(&RootProduct::from(&zeros), &p, 8, 0).unwrap();
        assert!(r <= 1e-10, "{r:e}");
    }

    #[test]
    fn jl_residuals() {
        for (alpha, beta) in [(0.0, 0.0), (0.5, 1.0), (2.0, -0.5)] {
            let p = JacobiLaguerreParams::new(-1.0, alpha, beta).unwrap();
            for (n, m) in [(1, 1), (2, 3), (4, 4), (3, 5)] {
                let (_, zeros) = jl_build(&p, n, m).unwrap();
                let r = jl_orthogonality_residual(&RootProduct::from(&zeros), &p, n, m).unwrap();
                assert!(r <= 1e-9, "({alpha},{beta}) ({n},{m}): {r}");
            }
        }
    }

    #[test]
    fn lh_limit_closed_form() {
        let res = limit_check_lh(0.0, 1, &[100.0, 200.0]).unwrap();
        let expected = |a: f64| 0.5f64.sqrt() - (a / (2.0 * a + 3.0)).sqrt();
        assert_abs_diff_eq!(res.errors[0], expected(100.0), epsilon = 1e-10);
        assert_abs_diff_eq!(res.errors[0], 0.005244, epsilon = 1e-6);
        assert_abs_diff_eq!(res.errors[1], expected(200.0), epsilon = 1e-10);
        assert!(res.strictly_decreasing());
        assert_eq!(res.ratios.len(), 1);
        assert!((res.ratios[0] - 0.5).abs() < 0.05);
    }

    #[test]
    fn single_scale_has_no_ratios() {
        let res = limit_check_jl(0.0, 0.0, -1.0, 1, &[50.0]).unwrap();
        assert!(res.ratios.is_empty());
        assert!(limit_check_jl(0.0, 0.0, -1.0, 1, &[]).is_err());
        assert!(limit_check_lh(0.0, 1, &[100.0, 50.0]).is_err());
    }

    #[test]
    fn jl_limit_converges() {
        let res = limit_check_jl(0.0, 0.0, -1.0, 1, &[50.0, 100.0, 200.0, 400.0]).unwrap();
        assert!(res.strictly_decreasing(), "{res:?}");
    }
}
