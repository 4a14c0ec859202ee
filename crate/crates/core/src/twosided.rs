//! Polynomials with `n` zeros on a left interval and `m` on a right one,
//! fixed by orthogonality against each side's weight.
//!
//! Write the polynomial as `A B` with `A` the left factor. Then `A` is the
//! degree-`n` orthogonal polynomial of `w |B|` on the left and `B` the
//! degree-`m` one of `w |A|` on the right, and alternating the two Gauss-node
//! problems gives a well-conditioned start. Newton on the conditions, with
//! the zeros as unknowns, polishes it. Both stay in factored form, which is
//! accurate where an expansion in a fixed basis has to cancel: many zeros
//! crowded on one side leave it tiny there and large on the other.

use crate::error::Result;
use crate::linalg::solve_row_scaled;
use crate::polynomial::{RealPolynomial, RootProduct, ZeroSet};
use crate::quadrature::discrete_orthogonal_zeros;

const SWEEPS: usize = 500;
const SWEEP_TOL: f64 = 1e-12;
const NEWTON_STEPS: usize = 8;

/// One side's weight as a discrete measure, with `count` test functions
/// sampled at its nodes.
#[derive(Debug, Clone)]
pub(crate) struct SideMeasure {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    count: usize,
    // `tests[node * count + i]`
    tests: Vec<f64>,
}

impl SideMeasure {
    pub fn new(
        nodes: Vec<f64>,
        weights: Vec<f64>,
        count: usize,
        mut test: impl FnMut(f64, &mut [f64]),
    ) -> Self {
        let mut tests = vec![0.0; nodes.len() * count];
        if count > 0 {
            for (x, out) in nodes.iter().zip(tests.chunks_mut(count)) {
                test(*x, out);
            }
        }
        Self {
            nodes,
            weights,
            count,
            tests,
        }
    }

    fn zeros_against(&self, other: &[f64]) -> Result<Vec<f64>> {
        let factor = RootProduct::new(other.to_vec());
        let weights: Vec<f64> = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * factor.eval(*x).abs())
            .collect();
        discrete_orthogonal_zeros(&self.nodes, &weights, self.count)
    }
}

/// Starting zeros by alternating the one-sided problems until they settle.
pub(crate) fn alternate(left: &SideMeasure, right: &SideMeasure) -> Result<ZeroSet> {
    let mut a = left.zeros_against(&[])?;
    let mut b = right.zeros_against(&a)?;
    for _ in 0..SWEEPS {
        let next_a = left.zeros_against(&b)?;
        let next_b = right.zeros_against(&next_a)?;
        let change = a
            .iter()
            .zip(&next_a)
            .chain(b.iter().zip(&next_b))
            .fold(0.0, |c: f64, (u, v)| {
                c.max((u - v).abs() / v.abs().max(1.0))
            });
        a = next_a;
        b = next_b;
        if change <= SWEEP_TOL {
            break;
        }
    }
    Ok(ZeroSet::new(a, b))
}

/// Newton polish of `start`. Zeros must stay in `(lo, 0)` and `(0, hi)`;
/// if an iterate leaves them, `start` is returned as it was.
pub(crate) fn polish(
    left: &SideMeasure,
    right: &SideMeasure,
    start: ZeroSet,
    lo: f64,
    hi: f64,
    context: impl Fn() -> String,
) -> Result<ZeroSet> {
    let total = left.count + right.count;
    let mut x = start.all();
    let mut best = x.clone();
    let mut last_step = f64::INFINITY;
    let mut prefix = vec![0.0; total + 1];
    for _ in 0..NEWTON_STEPS {
        let mut rows = Vec::with_capacity(total);
        for side in [left, right] {
            if side.count == 0 {
                continue;
            }
            // Row i: [-∫ τ_i P/(y - x_j) w for each j | ∫ τ_i P w]
            let mut acc = vec![0.0; side.count * (total + 1)];
            for (node, (y, w)) in side.nodes.iter().zip(&side.weights).enumerate() {
                let tests = &side.tests[node * side.count..(node + 1) * side.count];
                prefix[0] = 1.0;
                for j in 0..total {
                    prefix[j + 1] = prefix[j] * (y - x[j]);
                }
                let mut suffix = 1.0;
                for j in (0..total).rev() {
                    let without_j = w * prefix[j] * suffix;
                    suffix *= y - x[j];
                    for (i, t) in tests.iter().enumerate() {
                        acc[i * (total + 1) + j] -= t * without_j;
                    }
                }
                for (i, t) in tests.iter().enumerate() {
                    acc[i * (total + 1) + total] += t * w * prefix[total];
                }
            }
            rows.extend(acc.chunks(total + 1).map(|r| r.to_vec()));
        }
        let step = solve_row_scaled(rows, total, &context)?;
        let size = x
            .iter()
            .zip(&step)
            .fold(0.0, |s: f64, (xj, d)| s.max(d.abs() / xj.abs().max(1.0)));
        // Past the rounding floor the steps stop shrinking; keep the last good iterate.
        if size > 0.5 * last_step {
            break;
        }
        x.iter_mut().zip(&step).for_each(|(xj, d)| *xj += d);
        best.clone_from(&x);
        last_step = size;
        if size <= 4.0 * f64::EPSILON {
            break;
        }
    }
    let (mut negative, mut positive): (Vec<f64>, Vec<f64>) = best.iter().partition(|z| **z < 0.0);
    let inside = negative.iter().all(|z| *z > lo) && positive.iter().all(|z| *z > 0.0 && *z < hi);
    if negative.len() != left.count || !inside {
        return Ok(start);
    }
    negative.sort_by(f64::total_cmp);
    positive.sort_by(f64::total_cmp);
    Ok(ZeroSet::new(negative, positive))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{gauss_rule, Family};

    fn legendre_side(lo: f64, hi: f64, count: usize) -> SideMeasure {
        let rule = gauss_rule(80, Family::Jacobi { p: 0.0, q: 0.0 }).unwrap();
        let half = (hi - lo) / 2.0;
        let nodes = rule.nodes.iter().map(|t| lo + half * (t + 1.0)).collect();
        let weights = rule.weights.iter().map(|w| w * half).collect();
        SideMeasure::new(nodes, weights, count, |x, out| {
            let mut p = 1.0;
            for o in out.iter_mut() {
                *o = p;
                p *= x;
            }
        })
    }

    #[test]
    fn one_zero_each_side_of_a_symmetric_pair() {
        // Constant weight on [-1, 0] and [0, 1]: by symmetry P = x^2 - c with
        // ∫_0^1 (x^2 - c) dx = 0, so c = 1/3.
        let (left, right) = (legendre_side(-1.0, 0.0, 1), legendre_side(0.0, 1.0, 1));
        let start = alternate(&left, &right).unwrap();
        let z = polish(&left, &right, start, -1.0, 1.0, String::new).unwrap();
        let root = (1.0f64 / 3.0).sqrt();
        assert!((z.negative[0] + root).abs() < 1e-14);
        assert!((z.positive[0] - root).abs() < 1e-14);
    }

    #[test]
    fn polish_recovers_from_a_perturbed_start() {
        let (left, right) = (legendre_side(-1.0, 0.0, 2), legendre_side(0.0, 1.0, 3));
        let exact = polish(
            &left,
            &right,
            alternate(&left, &right).unwrap(),
            -1.0,
            1.0,
            String::new,
        )
        .unwrap();
        let bumped = ZeroSet::new(
            exact.negative.iter().map(|z| z + 1e-4).collect(),
            exact.positive.iter().map(|z| z - 1e-4).collect(),
        );
        let again = polish(&left, &right, bumped, -1.0, 1.0, String::new).unwrap();
        assert!(again.max_distance(&exact) < 1e-13);
    }
}
