//! Verification reports and monotonicity verdicts.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Steps with `|Δ| <= MONOTONE_MARGIN` are numerically indistinguishable.
pub const MONOTONE_MARGIN: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Reported but never gating.
    Info,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub inputs: Value,
    pub verdict: Verdict,
    /// Signed distance to the failure boundary; positive when passing.
    pub margin: Option<f64>,
    pub detail: String,
}

impl Case {
    pub fn new(
        inputs: Value,
        verdict: Verdict,
        margin: Option<f64>,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            inputs,
            verdict,
            margin,
            detail: detail.into(),
        }
    }

    /// Pass iff `margin > 0`.
    pub fn from_margin(inputs: Value, margin: f64, detail: impl Into<String>) -> Self {
        let verdict = if margin > 0.0 {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Self::new(inputs, verdict, Some(margin), detail)
    }

    pub fn failure(inputs: Value, detail: impl Into<String>) -> Self {
        Self::new(inputs, Verdict::Fail, None, detail)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub grid: Value,
    pub cases: Vec<Case>,
    pub pass: bool,
    pub elapsed_seconds: f64,
}

impl VerificationReport {
    /// `pass` is derived: true iff no case failed.
    pub fn new(
        suite: impl Into<String>,
        grid: Value,
        cases: Vec<Case>,
        elapsed_seconds: f64,
    ) -> Self {
        let pass = cases.iter().all(|c| c.verdict != Verdict::Fail);
        Self {
            suite: suite.into(),
            grid,
            cases,
            pass,
            elapsed_seconds,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    /// Smallest margin over all cases that carry one.
    pub fn min_margin(&self) -> Option<f64> {
        self.cases.iter().filter_map(|c| c.margin).reduce(f64::min)
    }
}

/// Trend of one zero along a parameter grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "trend", rename_all = "kebab-case")]
pub enum Trend {
    StrictlyIncreasing,
    StrictlyDecreasing,
    /// Monotone apart from steps inside the noise margin; `index` is the first such step.
    Indistinguishable {
        index: usize,
    },
    /// `first_violation` is the grid index where the direction first reverses.
    NonMonotone {
        first_violation: usize,
    },
}

impl Trend {
    pub fn label(&self) -> String {
        match self {
            Trend::StrictlyIncreasing => "strictly-increasing".into(),
            Trend::StrictlyDecreasing => "strictly-decreasing".into(),
            Trend::Indistinguishable { index } => format!("indistinguishable at step {index}"),
            Trend::NonMonotone { first_violation } => {
                format!("non-monotone (first violation at index {first_violation})")
            }
        }
    }
}

/// Classifies one column of values taken along an ascending grid.
pub fn classify_trend(values: &[f64]) -> Trend {
    let diffs: Vec<f64> = values.windows(2).map(|w| w[1] - w[0]).collect();
    let first_up = diffs.iter().position(|&d| d > MONOTONE_MARGIN);
    let first_down = diffs.iter().position(|&d| d < -MONOTONE_MARGIN);
    if let (Some(u), Some(d)) = (first_up, first_down) {
        return Trend::NonMonotone {
            first_violation: u.max(d) + 1,
        };
    }
    if let Some(i) = diffs.iter().position(|d| d.abs() <= MONOTONE_MARGIN) {
        return Trend::Indistinguishable { index: i + 1 };
    }
    match (first_up, first_down) {
        (_, Some(_)) => Trend::StrictlyDecreasing,
        _ => Trend::StrictlyIncreasing,
    }
}

/// Smallest step in the expected direction: `min_i sign*(v_{i+1} - v_i)`.
pub fn directional_margin(values: &[f64], increasing: bool) -> f64 {
    let sign = if increasing { 1.0 } else { -1.0 };
    values
        .windows(2)
        .map(|w| sign * (w[1] - w[0]))
        .fold(f64::INFINITY, f64::min)
}

/// Ascending grid `from, from + step, ...` up to `to` (inclusive within rounding).
pub fn step_grid(from: f64, to: f64, step: f64) -> Vec<f64> {
    let count = ((to - from) / step + 1e-9).floor() as usize + 1;
    (0..count).map(|i| from + step * i as f64).collect()
}

/// `steps` equally spaced values from `from` to `to`.
pub fn linspace(from: f64, to: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![from];
    }
    let h = (to - from) / (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            if i + 1 == steps {
                to
            } else {
                from + h * i as f64
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn trends() {
        assert_eq!(classify_trend(&[0.0, 0.1, 0.3]), Trend::StrictlyIncreasing);
        assert_eq!(
            classify_trend(&[0.0, -0.1, -0.3]),
            Trend::StrictlyDecreasing
        );
        assert_eq!(
            classify_trend(&[0.0, 0.1, 0.1 + 1e-12, 0.2]),
            Trend::Indistinguishable { index: 2 }
        );
        assert_eq!(
            classify_trend(&[0.0, 0.1, 0.05, 0.2]),
            Trend::NonMonotone { first_violation: 2 }
        );
        assert_eq!(Trend::StrictlyIncreasing.label(), "strictly-increasing");
    }

    #[test]
    fn margins_and_grids() {
        assert!((directional_margin(&[0.0, 0.1, 0.3], true) - 0.1).abs() < 1e-15);
        assert!(directional_margin(&[0.0, 0.1, 0.3], false) < 0.0);
        let g = step_grid(-0.9, 5.0, 0.1);
        assert_eq!(g.len(), 60);
        assert!((g[59] - 5.0).abs() < 1e-12);
        assert_eq!(step_grid(0.0, 3.0, 0.5).len(), 7);
        let l = linspace(0.0, 3.0, 31);
        assert_eq!(l.len(), 31);
        assert_eq!(l[30], 3.0);
    }

    #[test]
    fn report_pass_flag() {
        let ok = Case::from_margin(json!({}), 0.5, "");
        let info = Case::new(json!({}), Verdict::Info, None, "");
        let bad = Case::from_margin(json!({}), -0.1, "");
        assert!(VerificationReport::new("s", json!({}), vec![ok.clone(), info.clone()], 0.0).pass);
        let r = VerificationReport::new("s", json!({}), vec![ok, info, bad], 0.0);
        assert!(!r.pass);
        assert_eq!(r.failures().count(), 1);
        assert_eq!(r.min_margin(), Some(-0.1));
        let v = serde_json::to_value(&r).unwrap();
        for key in ["suite", "grid", "cases", "pass", "elapsed_seconds"] {
            assert!(v.get(key).is_some());
        }
        assert_eq!(v["cases"][0]["verdict"], "pass");
    }
}
