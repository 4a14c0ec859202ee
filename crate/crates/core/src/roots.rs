//! Sign-change localization on a uniform grid followed by bisection.

use crate::error::{Error, Result};

pub(crate) const INITIAL_CELLS: usize = 64;
pub(crate) const MAX_REFINEMENTS: usize = 14;
pub(crate) const BISECTION_TOL: f64 = 1e-13;

/// Finds exactly `expected` simple roots of `f` in `(lo, hi)`.
///
/// The grid starts at 64 cells and doubles until `expected` sign changes
/// show up; more than `expected` is an error.
pub(crate) fn localize_in(
    f: &impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    expected: usize,
) -> Result<Vec<f64>> {
    if expected == 0 {
        return Ok(Vec::new());
    }
    let mut cells = INITIAL_CELLS;
    let mut found = 0;
    for _ in 0..=MAX_REFINEMENTS {
        let brackets = sign_changes(f, lo, hi, cells);
        found = brackets.len();
        if found == expected {
            return Ok(brackets
                .into_iter()
                .map(|(l, h)| bisect(f, l, h, BISECTION_TOL))
                .collect());
        }
        if found > expected {
            break;
        }
        cells *= 2;
    }
    Err(Error::Localization {
        lo,
        hi,
        expected,
        found,
    })
}

/// Half-line variant: each window `(0, w)` is refined like [`localize_in`]
/// and doubled only while roots are still missing. `mirror` searches
/// `(-w, 0)` instead. Roots come back ascending.
pub(crate) fn localize_half_line(
    f: &impl Fn(f64) -> f64,
    initial_window: f64,
    expected: usize,
    mirror: bool,
) -> Result<Vec<f64>> {
    if expected == 0 {
        return Ok(Vec::new());
    }
    let sign = if mirror { -1.0 } else { 1.0 };
    let g = |x: f64| f(sign * x);
    let mut window = initial_window;
    let mut doubling = 0;
    loop {
        match localize_in(&g, 0.0, window, expected) {
            Ok(mut roots) => {
                roots.iter_mut().for_each(|r| *r *= sign);
                roots.sort_by(f64::total_cmp);
                return Ok(roots);
            }
            Err(Error::Localization { found, .. })
                if found < expected && doubling < MAX_REFINEMENTS =>
            {
                window *= 2.0;
                doubling += 1;
            }
            Err(e) => return Err(e),
        }
    }
}

fn sign_changes(f: &impl Fn(f64) -> f64, lo: f64, hi: f64, cells: usize) -> Vec<(f64, f64)> {
    let h = (hi - lo) / cells as f64;
    let point = |i: usize| if i == cells { hi } else { lo + h * i as f64 };
    let mut out = Vec::new();
    let mut x0 = lo;
    let mut f0 = f(lo);
    for i in 1..=cells {
        let x1 = point(i);
        let f1 = f(x1);
        if f1 == 0.0 && i < cells {
            // Exact hit on an interior grid point: a degenerate bracket.
            out.push((x1, x1));
            // Continue from just past the root so it is not counted twice.
            x0 = x1;
            f0 = -f0;
            continue;
        }
        if (f0 < 0.0 && f1 > 0.0) || (f0 > 0.0 && f1 < 0.0) {
            out.push((x0, x1));
        }
        x0 = x1;
        f0 = f1;
    }
    out
}

/// Bisection on `[lo, hi]` with `f(hi) != 0` and a sign change inside.
/// `f(lo)` may be zero after an exact grid hit, so only `f(hi)` is trusted.
pub(crate) fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    if lo == hi {
        return lo;
    }
    let hi_negative = f(hi) < 0.0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == hi_negative {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_expected_roots() {
        let f = |x: f64| (x - 0.1) * (x - 0.2) * (x - 0.7);
        let r = localize_in(&f, 0.0, 1.0, 3).unwrap();
        for (got, want) in r.iter().zip([0.1, 0.2, 0.7]) {
            assert!((got - want).abs() < 1e-13);
        }
    }

    #[test]
    fn close_pair_needs_refinement() {
        let f = |x: f64| (x - 0.5) * (x - 0.5001);
        let r = localize_in(&f, 0.0, 1.0, 2).unwrap();
        assert!((r[0] - 0.5).abs() < 1e-13 && (r[1] - 0.5001).abs() < 1e-13);
    }

    #[test]
    fn too_many_or_too_few() {
        let f = |x: f64| (x - 0.3) * (x - 0.6);
        assert!(matches!(
            localize_in(&f, 0.0, 1.0, 1),
            Err(Error::Localization { found: 2, .. })
        ));
        let g = |x: f64| x * x + 1.0;
        assert!(localize_in(&g, 0.0, 1.0, 1).is_err());
    }

    #[test]
    fn half_line_windows() {
        let f = |x: f64| (x - 3.0) * (x - 150.0) * (x + 40.0);
        assert_eq!(localize_half_line(&f, 16.0, 2, false).unwrap().len(), 2);
        let neg = localize_half_line(&f, 16.0, 1, true).unwrap();
        assert!((neg[0] + 40.0).abs() < 1e-12);
    }
}
