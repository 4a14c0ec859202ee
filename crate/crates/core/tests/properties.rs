//! Cross-module properties: cascade against the orthogonality oracle, oracle
//! residuals up to total degree 12, and the half-line families.

use angelesco::cascade::{diagonal_ladder, diagonal_zeros, interlacing_margin, DEFAULT_TOL};
use angelesco::gram::{orthogonality_residual, type2_zeros};
use angelesco::limits::{
    jl_build, jl_orthogonality_residual, lh_build, lh_orthogonality_residual, JacobiLaguerreParams,
    LaguerreHermiteParams,
};
use angelesco::{AngelescoParams, RootProduct};
use proptest::prelude::*;

const EXPONENTS: [f64; 4] = [-0.5, 0.0, 0.5, 2.0];

#[test]
fn oracle_residuals_up_to_total_degree_twelve() {
    let mut worst: f64 = 0.0;
    for a in [-2.0, -1.0, -0.25] {
        for (alpha, beta, gamma) in [
            (-0.5, -0.5, -0.5),
            (0.0, 0.0, 0.0),
            (0.5, 2.0, -0.5),
            (2.0, 0.5, 2.0),
            (2.0, 2.0, 2.0),
        ] {
            let p = AngelescoParams::new(a, alpha, beta, gamma).unwrap();
            for total in 1..=12 {
                for n in 0..=total {
                    let m = total - n;
                    let zeros = type2_zeros(&p, n, m).unwrap();
                    assert_eq!(zeros.counts(), (n, m));
                    let r = orthogonality_residual(&RootProduct::from(&zeros), &p, n, m).unwrap();
                    worst = worst.max(r);
                    assert!(r <= 1e-9, "{p:?} ({n},{m}): residual {r:e}");
                }
            }
        }
    }
    assert!(worst <= 1e-9);
}

#[test]
fn jacobi_laguerre_residuals_up_to_total_degree_eight() {
    for a in [-2.0, -1.0, -0.25] {
        for alpha in EXPONENTS {
            for beta in EXPONENTS {
                let p = JacobiLaguerreParams::new(a, alpha, beta).unwrap();
                for total in 1..=8 {
                    for n in 0..=total {
                        let m = total - n;
                        let (_, zeros) = jl_build(&p, n, m).unwrap();
                        assert_eq!(zeros.counts(), (n, m));
                        let product = RootProduct::from(&zeros);
                        let r = jl_orthogonality_residual(&product, &p, n, m).unwrap();
                        assert!(r <= 1e-9, "{p:?} ({n},{m}): residual {r:e}");
                    }
                }
            }
        }
    }
}

#[test]
fn laguerre_hermite_symmetry_and_residuals() {
    for beta in EXPONENTS.into_iter().chain([1.0, 3.0]) {
        for n in 1..=6 {
            let p = LaguerreHermiteParams::new(beta).unwrap();
            let (poly, zeros) = lh_build(&p, n, n).unwrap();
            assert!(zeros.symmetry_defect() <= 1e-10, "beta {beta} n {n}");
            assert!(lh_orthogonality_residual(&poly, beta, n, n) <= 1e-10);
        }
    }
}

fn exponent() -> impl Strategy<Value = f64> {
    -0.95f64..6.0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cascade_matches_oracle(
        a in -3.0f64..-0.05,
        alpha in exponent(),
        beta in exponent(),
        gamma in exponent(),
        n in 1usize..=5,
    ) {
        let p = AngelescoParams::new(a, alpha, beta, gamma).unwrap();
        let c = diagonal_zeros(&p, n, DEFAULT_TOL).unwrap();
        let g = type2_zeros(&p, n, n).unwrap();
        prop_assert!(c.max_distance(&g) <= 1e-8, "{:?} n {}: {:e}", p, n, c.max_distance(&g));
    }

    #[test]
    fn ladders_interlace(
        a in -3.0f64..-0.05,
        alpha in exponent(),
        beta in exponent(),
        gamma in exponent(),
        n in 2usize..=8,
    ) {
        let p = AngelescoParams::new(a, alpha, beta, gamma).unwrap();
        let levels = diagonal_ladder(&p, n, DEFAULT_TOL).unwrap();
        for w in levels.windows(2) {
            prop_assert!(interlacing_margin(&w[1].zeros, &w[0].zeros) > 0.0);
        }
    }

    #[test]
    fn symmetric_weights_give_symmetric_zeros(
        e in exponent(),
        beta in exponent(),
        n in 1usize..=6,
    ) {
        let p = AngelescoParams::new(-1.0, e, beta, e).unwrap();
        let z = diagonal_zeros(&p, n, DEFAULT_TOL).unwrap();
        prop_assert!(z.symmetry_defect() <= 1e-10);
    }

    #[test]
    fn zeros_move_right_as_alpha_grows(
        a in -2.0f64..-0.25,
        alpha in -0.9f64..4.0,
        beta in exponent(),
        gamma in exponent(),
        delta in 0.05f64..1.0,
        n in 1usize..=4,
    ) {
        let lo = diagonal_zeros(&AngelescoParams::new(a, alpha, beta, gamma).unwrap(), n, DEFAULT_TOL).unwrap();
        let hi = diagonal_zeros(&AngelescoParams::new(a, alpha + delta, beta, gamma).unwrap(), n, DEFAULT_TOL).unwrap();
        for (x, y) in lo.iter().zip(hi.iter()) {
            prop_assert!(y > x);
        }
    }
}
