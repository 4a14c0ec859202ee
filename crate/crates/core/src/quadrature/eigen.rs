//! Symmetric tridiagonal eigenvalues by implicit-shift QL, carrying only
//! the first component of each eigenvector (all Golub-Welsch needs).

const MAX_ITERATIONS: usize = 50;

/// Result of the eigen-solve: unsorted eigenvalues and first eigenvector components.
#[derive(Debug)]
pub(crate) struct TridiagonalEigen {
    pub values: Vec<f64>,
    pub first_components: Vec<f64>,
}

/// `diag` has length `m`, `offdiag` length `m - 1`. Returns `None` when some
/// eigenvalue needs more than 50 QL sweeps.
pub(crate) fn tridiagonal_eigen(diag: &[f64], offdiag: &[f64]) -> Option<TridiagonalEigen> {
    let n = diag.len();
    debug_assert_eq!(offdiag.len() + 1, n.max(1));
    let mut d = diag.to_vec();
    let mut e = offdiag.to_vec();
    e.push(0.0);
    let mut z = vec![0.0; n];
    if n > 0 {
        z[0] = 1.0;
    }

    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_ITERATIONS {
                return None;
            }

            // Wilkinson-style shift from the leading 2x2 block.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;

            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                let r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                let r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;

                let f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    Some(TridiagonalEigen {
        values: d,
        first_components: z,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        // [[2, 1], [1, 2]] has eigenvalues 1 and 3, eigenvectors (1, -1)/sqrt2, (1, 1)/sqrt2.
        let eig = tridiagonal_eigen(&[2.0, 2.0], &[1.0]).unwrap();
        let mut pairs: Vec<_> = eig.values.iter().zip(&eig.first_components).collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(b.0).unwrap());
        assert!((pairs[0].0 - 1.0).abs() < 1e-15);
        assert!((pairs[1].0 - 3.0).abs() < 1e-15);
        assert!((pairs[0].1.powi(2) - 0.5).abs() < 1e-15);
        assert!((pairs[1].1.powi(2) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn laplacian_spectrum() {
        // tridiag(-1, 2, -1) of size n: eigenvalues 2 - 2 cos(k pi / (n + 1)).
        let n = 40;
        let eig = tridiagonal_eigen(&vec![2.0; n], &vec![-1.0; n - 1]).unwrap();
        let mut values = eig.values.clone();
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (k, v) in values.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((v - exact).abs() < 1e-13, "{k}: {v} vs {exact}");
        }
        let norm: f64 = eig.first_components.iter().map(|z| z * z).sum();
        assert!((norm - 1.0).abs() < 1e-13);
    }

    #[test]
    fn trivial_sizes() {
        let eig = tridiagonal_eigen(&[3.5], &[]).unwrap();
        assert_eq!(eig.values, vec![3.5]);
        assert_eq!(eig.first_components, vec![1.0]);
    }
}
