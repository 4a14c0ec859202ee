use std::f64::consts::PI;

use crate::error::{Error, Result};

// Lanczos approximation, g = 7, nine terms, digits as usually tabulated.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function for positive real arguments.
pub fn gamma_function(z: f64) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::InvalidParam {
            field: "z",
            message: "must be positive",
            value: z,
        });
    }
    Ok(gamma_positive(z))
}

pub(crate) fn gamma_positive(z: f64) -> f64 {
    // Small integers are exact as factorials.
    if z == z.floor() && z <= 23.0 {
        return (1..z as u64).fold(1.0, |acc, k| acc * k as f64);
    }
    if z < 0.5 {
        return PI / ((PI * z).sin() * gamma_positive(1.0 - z));
    }
    let z = z - 1.0;
    let mut series = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    // t^(z+1/2) e^-t split in half to stay finite up to z ~ 170.
    let half = t.powf(0.5 * (z + 0.5)) * (-0.5 * t).exp();
    (2.0 * PI).sqrt() * half * half * series
}

/// Beta function `B(x, y)` for positive arguments.
pub(crate) fn beta_positive(x: f64, y: f64) -> f64 {
    gamma_positive(x) * gamma_positive(y) / gamma_positive(x + y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let sqrt_pi = PI.sqrt();
        assert!((gamma_function(0.5).unwrap() - sqrt_pi).abs() < 1e-15 * sqrt_pi);
        assert!((gamma_function(1.5).unwrap() - 0.5 * sqrt_pi).abs() < 1e-15);
        assert_eq!(gamma_function(5.0).unwrap(), 24.0);
        assert_eq!(gamma_function(1.0).unwrap(), 1.0);
        // 30! / 30 = 29!
        let g30 = gamma_function(30.0).unwrap();
        assert!((g30 / 8.841_761_993_739_701e30 - 1.0).abs() < 1e-13);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(gamma_function(0.0).is_err());
        assert!(gamma_function(-2.5).is_err());
    }

    #[test]
    fn functional_equation_on_grid() {
        for i in 1..=300 {
            let z = i as f64 * 0.1;
            let lhs = gamma_function(z + 1.0).unwrap();
            let rhs = z * gamma_function(z).unwrap();
            assert!((lhs / rhs - 1.0).abs() < 1e-12, "z = {z}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn large_arguments() {
        // Gamma(60) = 59!
        let mut fact = 1.0f64;
        for k in 1..60 {
            fact *= k as f64;
        }
        let g = gamma_function(60.0).unwrap();
        assert!((g / fact - 1.0).abs() < 1e-12);
        let g = gamma_function(59.5).unwrap();
        let g_next = gamma_function(60.5).unwrap();
        assert!((g_next / (59.5 * g) - 1.0).abs() < 1e-12);
    }
}
