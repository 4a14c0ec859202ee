//! The two-interval Angelesco weight `(x - a)^alpha |x|^beta (1 - x)^gamma`
//! on `[a, 0] ∪ [0, 1]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters `(a, alpha, beta, gamma)` of the weight system.
///
/// Construct through [`AngelescoParams::new`] to get validation; the fields
/// stay public so shifted copies can be made cheaply inside the ladder.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngelescoParams {
    pub a: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl AngelescoParams {
    pub fn new(a: f64, alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        Self {
            a,
            alpha,
            beta,
            gamma,
        }
        .validate()
    }

    /// Returns `self` unchanged when `a < 0` and every exponent exceeds -1.
    pub fn validate(self) -> Result<Self> {
        if !(self.a < 0.0) || !self.a.is_finite() {
            return Err(Error::InvalidParam {
                field: "a",
                message: "must be negative",
                value: self.a,
            });
        }
        for (field, value) in [
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("gamma", self.gamma),
        ] {
            if !(value > -1.0) || !value.is_finite() {
                return Err(Error::InvalidParam {
                    field,
                    message: "must exceed -1",
                    value,
                });
            }
        }
        Ok(self)
    }

    /// All three exponents raised by `k`.
    pub fn shifted(self, k: f64) -> Self {
        Self {
            alpha: self.alpha + k,
            beta: self.beta + k,
            gamma: self.gamma + k,
            ..self
        }
    }

    /// `a = -1` and `alpha = gamma`: the weight is even and zeros are symmetric.
    pub fn is_symmetric(&self) -> bool {
        self.a == -1.0 && self.alpha == self.gamma
    }

    /// Evaluates the weight at `x`.
    ///
    /// A negative exponent at its own endpoint gives `+inf`; callers can test
    /// the result with `is_infinite()`. Quadrature never samples those points.
    pub fn weight(&self, x: f64) -> Result<f64> {
        eval_weight(x, self)
    }

    pub fn log_derivative(&self, x: f64) -> Result<f64> {
        weight_log_derivative(x, self)
    }
}

/// `(x - a)^alpha * |x|^beta * (1 - x)^gamma` for `a <= x <= 1`.
pub fn eval_weight(x: f64, p: &AngelescoParams) -> Result<f64> {
    if !(x >= p.a && x <= 1.0) {
        return Err(Error::OutOfDomain {
            x,
            lo: p.a,
            hi: 1.0,
        });
    }
    // powf(0, e) is 1 for e = 0, 0 for e > 0 and +inf for e < 0.
    Ok((x - p.a).powf(p.alpha) * x.abs().powf(p.beta) * (1.0 - x).powf(p.gamma))
}

/// `alpha/(x - a) + beta/x - gamma/(1 - x)`, the logarithmic derivative of the weight.
pub fn weight_log_derivative(x: f64, p: &AngelescoParams) -> Result<f64> {
    for pole in [p.a, 0.0, 1.0] {
        if x == pole {
            return Err(Error::Pole { x, pole });
        }
    }
    Ok(p.alpha / (x - p.a) + p.beta / x - p.gamma / (1.0 - x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn params(a: f64, alpha: f64, beta: f64, gamma: f64) -> AngelescoParams {
        AngelescoParams::new(a, alpha, beta, gamma).unwrap()
    }

    #[test]
    fn validation() {
        assert!(AngelescoParams::new(-1.0, 0.0, 0.0, 0.0).is_ok());
        match AngelescoParams::new(0.0, 0.0, 0.0, 0.0) {
            Err(Error::InvalidParam { field, .. }) => assert_eq!(field, "a"),
            other => panic!("unexpected {other:?}"),
        }
        match AngelescoParams::new(-1.0, -1.0, 0.0, 0.0) {
            Err(Error::InvalidParam { field, .. }) => assert_eq!(field, "alpha"),
            other => panic!("unexpected {other:?}"),
        }
        match AngelescoParams::new(-1.0, 0.0, 0.0, -1.5) {
            Err(Error::InvalidParam { field, .. }) => assert_eq!(field, "gamma"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(AngelescoParams::new(f64::NAN, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn weight_values() {
        assert_eq!(eval_weight(0.5, &params(-1.0, 0.0, 0.0, 0.0)).unwrap(), 1.0);
        assert_relative_eq!(
            eval_weight(0.5, &params(-1.0, 1.0, 1.0, 1.0)).unwrap(),
            0.375
        );
        assert_relative_eq!(
            eval_weight(-0.5, &params(-1.0, 1.0, 1.0, 1.0)).unwrap(),
            0.375
        );
        assert!(eval_weight(1.5, &params(-1.0, 0.0, 0.0, 0.0)).is_err());
        assert!(eval_weight(-1.5, &params(-1.0, 0.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn singular_endpoint_is_flagged_infinity() {
        let p = params(-1.0, 0.0, -0.5, 0.0);
        assert!(eval_weight(0.0, &p).unwrap().is_infinite());
        let p = params(-1.0, 0.5, 0.5, 0.5);
        assert_eq!(eval_weight(0.0, &p).unwrap(), 0.0);
    }

    #[test]
    fn log_derivative_values() {
        assert_eq!(
            weight_log_derivative(0.5, &params(-1.0, 0.0, 0.0, 0.0)).unwrap(),
            0.0
        );
        assert_relative_eq!(
            weight_log_derivative(0.5, &params(-1.0, 1.0, 1.0, 1.0)).unwrap(),
            1.0 / 1.5 + 2.0 - 2.0
        );
        for x in [-1.0, 0.0, 1.0] {
            assert!(matches!(
                weight_log_derivative(x, &params(-1.0, 0.0, 2.0, 0.0)),
                Err(Error::Pole { .. })
            ));
        }
    }

    fn exponent() -> impl Strategy<Value = f64> {
        -0.95f64..4.0
    }

    proptest! {
        #[test]
        fn weight_nonnegative(a in -3.0f64..-0.05, al in exponent(), be in exponent(),
                              ga in exponent(), s in 0.0f64..=1.0) {
            let p = params(a, al, be, ga);
            let x = a + s * (1.0 - a);
            let w = eval_weight(x, &p).unwrap();
            prop_assert!(w >= 0.0);
        }

        #[test]
        fn symmetric_weight_is_even(al in exponent(), be in exponent(), x in 0.0f64..=1.0) {
            let p = params(-1.0, al, be, al);
            let left = eval_weight(-x, &p).unwrap();
            let right = eval_weight(x, &p).unwrap();
            if left.is_finite() {
                prop_assert!((left - right).abs() <= 1e-14 * right.abs().max(1e-300));
            } else {
                prop_assert!(right.is_infinite());
            }
        }

        #[test]
        fn log_derivative_matches_finite_difference(a in -3.0f64..-0.05, al in exponent(),
                                                    be in exponent(), ga in exponent(),
                                                    s in 0.05f64..0.95, left in any::<bool>()) {
            let p = params(a, al, be, ga);
            let x = if left { a * (1.0 - s) } else { s };
            let h = 1e-6;
            let fd = ((eval_weight(x + h, &p).unwrap()).ln()
                - (eval_weight(x - h, &p).unwrap()).ln()) / (2.0 * h);
            let exact = weight_log_derivative(x, &p).unwrap();
            // Relative accuracy 1e-6 of the logarithmic derivative; the absolute floor
            // covers points where the derivative itself crosses zero.
            prop_assert!((fd - exact).abs() <= 1e-6 * exact.abs().max(1.0), "{fd} vs {exact}");
        }
    }
}
