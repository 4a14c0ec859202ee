use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cascade::{self, DEFAULT_TOL};
use crate::classical;
use crate::error::{Error, Result};
use crate::gram;
use crate::limits::{self, CorollaryGrid, LaguerreHermiteParams};
use crate::report::{
    classify_trend, directional_margin, linspace, step_grid, Case, Verdict, VerificationReport,
    MONOTONE_MARGIN,
};
use crate::weight::AngelescoParams;

/// Largest acceptable `|cascade - gram|` in the oracle-equivalence suite.
pub const ORACLE_TOL: f64 = 1e-8;
/// Largest acceptable distance between a zero set and its mirror image.
pub const SYMMETRY_TOL: f64 = 1e-10;
/// Largest acceptable deviation from a closed-form zero or limit error.
pub const CLOSED_FORM_TOL: f64 = 1e-10;
/// Band for consecutive error ratios of the Laguerre-Hermite limit at `n = 1`.
pub const RATIO_BAND: (f64, f64) = (0.45, 0.55);

const EXPONENTS: [f64; 4] = [-0.5, 0.0, 0.5, 2.0];
const ORACLE_ENDPOINTS: [f64; 3] = [-2.0, -1.0, -0.25];
const MONOTONE_ENDPOINTS: [f64; 2] = [-1.0, -0.5];
const SYMMETRIC_EXPONENTS: [f64; 3] = [0.0, 0.5, 2.0];
const JL_SCALES: [f64; 4] = [50.0, 100.0, 200.0, 400.0];
const LH_SCALES: [f64; 5] = [50.0, 100.0, 200.0, 400.0, 800.0];
const LH_CLOSED_FORM_BETAS: [f64; 4] = [0.0, 0.5, 1.0, 3.0];
const EXPANSION_LAMBDAS: [f64; 3] = [0.5, 1.0, 2.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Interlacing,
    MonotoneAlpha,
    MonotoneGamma,
    MonotoneBetaSymmetric,
    MonotoneBetaExploratory,
    Symmetry,
    OracleEquivalence,
    Limits,
    Corollaries,
    ExpansionDiagnostic,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Interlacing,
        Suite::MonotoneAlpha,
        Suite::MonotoneGamma,
        Suite::MonotoneBetaSymmetric,
        Suite::MonotoneBetaExploratory,
        Suite::Symmetry,
        Suite::OracleEquivalence,
        Suite::Limits,
        Suite::Corollaries,
        Suite::ExpansionDiagnostic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Interlacing => "interlacing",
            Suite::MonotoneAlpha => "monotone-alpha",
            Suite::MonotoneGamma => "monotone-gamma",
            Suite::MonotoneBetaSymmetric => "monotone-beta-symmetric",
            Suite::MonotoneBetaExploratory => "monotone-beta-exploratory",
            Suite::Symmetry => "symmetry",
            Suite::OracleEquivalence => "oracle-equivalence",
            Suite::Limits => "limits",
            Suite::Corollaries => "corollaries",
            Suite::ExpansionDiagnostic => "expansion-diagnostic",
        }
    }

    pub fn default_n_max(self) -> usize {
        match self {
            Suite::Interlacing | Suite::OracleEquivalence | Suite::Symmetry => 6,
            Suite::Limits => 2,
            Suite::Corollaries => 3,
            _ => 4,
        }
    }

    /// Whether a failing case should fail the run. The exploratory β sweep
    /// and the expansion diagnostic only report.
    pub fn gates(self) -> bool {
        !matches!(
            self,
            Suite::MonotoneBetaExploratory | Suite::ExpansionDiagnostic
        )
    }

    /// Override flags the suite understands.
    fn accepted_overrides(self) -> &'static [&'static str] {
        match self {
            Suite::Interlacing | Suite::OracleEquivalence => {
                &["a", "alpha", "beta", "gamma", "tol"]
            }
            Suite::MonotoneAlpha => &["a", "beta", "gamma", "from", "to", "steps", "tol"],
            Suite::MonotoneGamma => &["a", "alpha", "beta", "from", "to", "steps", "tol"],
            Suite::MonotoneBetaSymmetric | Suite::MonotoneBetaExploratory => {
                &["a", "alpha", "gamma", "from", "to", "steps", "tol"]
            }
            Suite::Symmetry => &["a", "alpha", "beta", "gamma", "tol"],
            Suite::Limits => &["a", "alpha", "beta"],
            Suite::Corollaries => &["a", "beta"],
            Suite::ExpansionDiagnostic => &["beta"],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::Config(format!(
                    "unknown suite '{s}' (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Replaces one axis of a suite's default grid with a single value, or the
/// swept range with `[from, to]` at `steps` points.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct GridOverrides {
    pub a: Option<f64>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
    pub from: Option<f64>,
    pub to: Option<f64>,
    pub steps: Option<usize>,
    pub tol: Option<f64>,
}

impl GridOverrides {
    fn given(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let flags = [
            ("a", self.a.is_some()),
            ("alpha", self.alpha.is_some()),
            ("beta", self.beta.is_some()),
            ("gamma", self.gamma.is_some()),
            ("from", self.from.is_some()),
            ("to", self.to.is_some()),
            ("steps", self.steps.is_some()),
            ("tol", self.tol.is_some()),
        ];
        for (name, set) in flags {
            if set {
                out.push(name);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub n_max: Option<usize>,
    pub overrides: GridOverrides,
}

impl VerifyConfig {
    pub fn new(suite: Suite) -> Self {
        Self {
            suite,
            n_max: None,
            overrides: GridOverrides::default(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max.unwrap_or(self.suite.default_n_max())
    }

    fn validate(&self) -> Result<()> {
        let accepted = self.suite.accepted_overrides();
        if let Some(flag) = self
            .overrides
            .given()
            .into_iter()
            .find(|f| !accepted.contains(f))
        {
            return Err(Error::Config(format!(
                "suite {} does not take --{flag}",
                self.suite
            )));
        }
        let n_max = self.n_max();
        if n_max == 0 {
            return Err(Error::Config("n-max must be at least 1".into()));
        }
        if self.suite == Suite::Interlacing && n_max < 2 {
            return Err(Error::Config(
                "interlacing compares consecutive levels and needs n-max >= 2".into(),
            ));
        }
        if let Some(tol) = self.overrides.tol {
            if !(tol > 0.0) || !tol.is_finite() {
                return Err(Error::Config(format!("tol must be positive, got {tol}")));
            }
        }
        Ok(())
    }

    fn tol(&self) -> f64 {
        self.overrides.tol.unwrap_or(DEFAULT_TOL)
    }

    fn set(value: Option<f64>, default: &[f64]) -> Vec<f64> {
        value.map_or_else(|| default.to_vec(), |v| vec![v])
    }

    /// The swept axis: `[-0.9, 5]` in steps of 0.1 unless overridden.
    fn swept_grid(&self) -> Result<Vec<f64>> {
        let o = &self.overrides;
        if o.from.is_none() && o.to.is_none() && o.steps.is_none() {
            return Ok(step_grid(-0.9, 5.0, 0.1));
        }
        let from = o.from.unwrap_or(-0.9);
        let to = o.to.unwrap_or(5.0);
        if !(from.is_finite() && to.is_finite() && from < to) {
            return Err(Error::Config(format!(
                "sweep range needs from < to, got [{from}, {to}]"
            )));
        }
        if !(from > -1.0) {
            return Err(Error::Config(format!(
                "swept exponent must exceed -1, got from = {from}"
            )));
        }
        let steps = o.steps.unwrap_or(((to - from) / 0.1).round() as usize + 1);
        if steps < 2 {
            return Err(Error::Config("steps must be at least 2".into()));
        }
        Ok(linspace(from, to, steps))
    }

    /// `(a, α = γ)` values for the suites that need the symmetric weight.
    fn symmetric_axes(&self) -> Result<Vec<f64>> {
        let o = &self.overrides;
        if let Some(a) = o.a {
            if a != -1.0 {
                return Err(Error::Config(format!(
                    "suite {} requires a = -1 (symmetric weight), got a = {a}",
                    self.suite
                )));
            }
        }
        match (o.alpha, o.gamma) {
            (Some(al), Some(ga)) if al != ga => Err(Error::Config(format!(
                "suite {} requires alpha = gamma, got alpha = {al}, gamma = {ga}",
                self.suite
            ))),
            (Some(v), _) | (_, Some(v)) => Ok(vec![v]),
            (None, None) => Ok(SYMMETRIC_EXPONENTS.to_vec()),
        }
    }
}

/// Runs one suite. Invalid configuration is an error; solver failures
/// inside the grid become failing cases.
pub fn run_suite(config: &VerifyConfig) -> Result<VerificationReport> {
    config.validate()?;
    let start = Instant::now();
    let (grid, cases) = match config.suite {
        Suite::Interlacing => interlacing(config)?,
        Suite::OracleEquivalence => oracle_equivalence(config)?,
        Suite::MonotoneAlpha => monotone(config, Axis::Alpha)?,
        Suite::MonotoneGamma => monotone(config, Axis::Gamma)?,
        Suite::MonotoneBetaSymmetric => beta_symmetric(config)?,
        Suite::MonotoneBetaExploratory => beta_exploratory(config)?,
        Suite::Symmetry => symmetry(config)?,
        Suite::Limits => limit_suite(config)?,
        Suite::Corollaries => corollaries(config)?,
        Suite::ExpansionDiagnostic => expansion(config)?,
    };
    Ok(VerificationReport::new(
        config.suite.name(),
        grid,
        cases,
        start.elapsed().as_secs_f64(),
    ))
}

fn angelesco_grid(config: &VerifyConfig, endpoints: &[f64]) -> Result<Vec<AngelescoParams>> {
    let o = &config.overrides;
    let mut out = Vec::new();
    for a in VerifyConfig::set(o.a, endpoints) {
        for alpha in VerifyConfig::set(o.alpha, &EXPONENTS) {
            for beta in VerifyConfig::set(o.beta, &EXPONENTS) {
                for gamma in VerifyConfig::set(o.gamma, &EXPONENTS) {
                    out.push(AngelescoParams::new(a, alpha, beta, gamma)?);
                }
            }
        }
    }
    Ok(out)
}

fn inputs(p: &AngelescoParams, n: usize) -> Value {
    json!({"a": p.a, "alpha": p.alpha, "beta": p.beta, "gamma": p.gamma, "n": n})
}

fn param_grid_json(params: &[AngelescoParams], n_max: usize) -> Value {
    let axis = |f: fn(&AngelescoParams) -> f64| {
        let mut v: Vec<f64> = params.iter().map(f).collect();
        v.sort_by(f64::total_cmp);
        v.dedup();
        v
    };
    json!({
        "a": axis(|p| p.a),
        "alpha": axis(|p| p.alpha),
        "beta": axis(|p| p.beta),
        "gamma": axis(|p| p.gamma),
        "n_max": n_max,
    })
}

fn interlacing(config: &VerifyConfig) -> Result<(Value, Vec<Case>)> {
    let params = angelesco_grid(config, &ORACLE_ENDPOINTS)?;
    let n_max = config.n_max();
    let jobs: Vec<(AngelescoParams, usize)> = params
        .iter()
        .flat_map(|p| (2..=n_max).map(move |n| (*p, n)))
        .collect();
    let tol = config.tol();
    let cases = jobs
        .par_iter()
        .map(|(p, n)| match cascade::diagonal_ladder(p, *n, tol) {
            Ok(levels) => {
                let (worst_level, margin) = levels
                    .windows(2)
                    .map(|w| {
                        (
                            w[1].k,
                            cascade::interlacing_margin(&w[1].zeros, &w[0].zeros),
                        )
                    })
                    .fold(
                        (0, f64::INFINITY),
                        |acc, x| if x.1 < acc.1 { x } else { acc },
                    );
                Case::from_margin(
                    inputs(p, *n),
                    margin,
                    format!("smallest interlacing gap {margin:e} at level {worst_level}"),
                )
            }
            Err(e) => Case::failure(inputs(p, *n), e.to_string()),
        })
        .collect();
    Ok((param_grid_json(&params, n_max), cases))
}

fn oracle_equivalence(config: &VerifyConfig) -> Result<(Value, Vec<Case>)> {
    let params = angelesco_grid(config, &ORACLE_ENDPOINTS)?;
    let n_max = config.n_max();
    let jobs: Vec<(AngelescoParams, usize)> = params
        .iter()
        .flat_map(|p| (1..=n_max).map(move |n| (*p, n)))
        .collect();
    let tol = config.tol();
    let cases = jobs
        .par_iter()
        .map(|(p, n)| {
            let pair = cascade::diagonal_zeros(p, *n, tol)
                .and_then(|c| gram::type2_zeros(p, *n, *n).map(|g| (c, g)));
            match pair {
                Ok((c, g)) => {
                    let d = c.max_distance(&g);
                    Case::from_margin(
                        inputs(p, *n),
                        ORACLE_TOL - d,
                        format!("max |cascade - gram| = {d:e}"),
                    )
                }
                Err(e) => Case::failure(inputs(p, *n), e.to_string()),
            }
        })
        .collect();
    let mut grid = param_grid_json(&params, n_max);
    grid["tolerance"] = json!(ORACLE_TOL);
    Ok((grid, cases))
}

#[derive(Clone, Copy)]
enum Axis {
    Alpha,
    Beta,
    Gamma,
}

fn with_axis(p: &AngelescoParams, axis: Axis, v: f64) -> Result<AngelescoParams> {
    match axis {
        Axis::Alpha => AngelescoParams::new(p.a, v, p.beta, p.gamma),
        Axis::Beta => AngelescoParams::new(p.a, p.alpha, v, p.gamma),
        Axis::Gamma => AngelescoParams::new(p.a, p.alpha, p.beta, v),
    }
}

/// Zero trajectories of `P_{n,n}` along one exponent axis, one row per grid point.
fn trajectory(
    base: &AngelescoParams,
    axis: Axis,
    grid: &[f64],
    n: usize,
    tol: f64,
) -> Result<Vec<crate::ZeroSet>> {
    grid.iter()
        .map(|&v| cascade::diagonal_zeros(&with_axis(base, axis, v)?, n, tol))
        .collect()
}

fn column(rows: &[crate::ZeroSet], j: usize) -> Vec<f64> {
    rows.iter().map(|z| z.all()[j]).collect()
}

/// Worst directional step over all columns, and where it happened.
fn worst_step(rows: &[crate::ZeroSet], increasing: impl Fn(usize) -> bool) -> (f64, usize) {
    let columns = rows.first().map_or(0, |z| z.len());
    (0..columns)
        .map(|j| (directional_margin(&column(rows, j), increasing(j)), j))
        .fold(
            (f64::INFINITY, 0),
            |acc, x| if x.0 < acc.0 { x } else { acc },
        )
}

fn trend_labels(rows: &[crate::ZeroSet]) -> String {
    let columns = rows.first().map_or(0, |z| z.len());
    (0..columns)
        .map(|j| format!("z{}: {}", j + 1, classify_trend(&column(rows, j)).label()))
        .collect::<Vec<_>>()
        .join("; ")
}

fn monotone(config: &VerifyConfig, axis: Axis) -> Result<(Value, Vec<Case>)> {
    let grid = config.swept_grid()?;
    let o = &config.overrides;
    let fixed = [0.0, 1.0];
    let mut bases = Vec::new();
    for a in VerifyConfig::set(o.a, &MONOTONE_ENDPOINTS) {
        for beta in VerifyConfig::set(o.beta, &fixed) {
            for other in VerifyConfig::set(
                match axis {
                    Axis::Alpha => o.gamma,
                    _ => o.alpha,
                },
                &fixed,
            ) {
                let p = match axis {
                    Axis::Alpha => AngelescoParams::new(a, grid[0], beta, other)?,
                    _ => AngelescoParams::new(a, other, beta, grid[0])?,
                };
                bases.push(p);
            }
        }
    }
    let increasing = matches!(axis, Axis::Alpha);
    let swept = if increasing { "alpha" } else { "gamma" };
    let n_max = config.n_max();
    let jobs: Vec<(AngelescoParams, usize)> = bases
        .iter()
        .flat_map(|p| (1..=n_max).map(move |n| (*p, n)))
        .collect();
    let tol = config.tol();
    let cases = jobs
        .par_iter()
        .map(|(p, n)| {
            let mut case_inputs = inputs(p, *n);
            case_inputs[swept] = json!("swept");
            match trajectory(p, axis, &grid, *n, tol) {
                Ok(rows) => {
                    let (step, j) = worst_step(&rows, |_| increasing);
                    Case::from_margin(
                        case_inputs,
                        step - MONOTONE_MARGIN,
                        format!(
                            "smallest step {step:e} (z{}); {}",
                            j + 1,
                            trend_labels(&rows)
                        ),
                    )
                }
                Err(e) => Case::failure(case_inputs, e.to_string()),
            }
        })
        .collect();
    let grid_json = json!({
        "swept": swept,
        "values": grid,
        "a": VerifyConfig::set(o.a, &MONOTONE_ENDPOINTS),
        "fixed": fixed,
        "n_max": n_max,
        "margin": MONOTONE_MARGIN,
    });
    Ok((grid_json, cases))
}

fn beta_symmetric(config: &VerifyConfig) -> Result<(Value, Vec<Case>)> {
    let exponents = config.symmetric_axes()?;
    let grid = config.swept_grid()?;
    let n_max = config.n_max();
    let mut jobs = Vec::new();
    for &e in &exponents {
        let p = AngelescoParams::new(-1.0, e, grid[0], e)?;
        for n in 1..=n_max {
            jobs.push((p, n));
        }
    }
    let tol = config.tol();
    let cases = jobs
        .par_iter()
        .map(|(p, n)| {
            let mut case_inputs = inputs(p, *n);
            case_inputs["beta"] = json!("swept");
            match trajectory(p, Axis::Beta, &grid, *n, tol) {
                Ok(rows) => {
                    let (step, j) = worst_step(&rows, |j| j >= *n);
                    let defect = rows.iter().map(|z| z.symmetry_defect()).fold(0.0, f64::max);
                    let margin = (step - MONOTONE_MARGIN).min(SYMMETRY_TOL - defect);
                    Case::from_margin(
                        case_inputs,
                        margin,
                        format!(
                            "smallest step {step:e} (z{}); largest symmetry defect {defect:e}; {}",
                            j + 1,
                            trend_labels(&rows)
                        ),
                    )
                }
                Err(e) => Case::failure(case_inputs, e.to_string()),
            }
        })
        .collect();
    let grid_json = json!({
        "swept": "beta",
        "values": grid,
        "a": -1.0,
        "alpha_equals_gamma": exponents,
        "n_max": n_max,
        "margin": MONOTONE_MARGIN,
        "symmetry_tolerance": SYMMETRY_TOL,
    });
    Ok((grid_json, cases))
}

fn beta_exploratory(config: &VerifyConfig) -> Result<(Value, Vec<Case>)> {
    let grid = config.swept_grid()?;
    let o = &config.overrides;
    let fixed = [0.0, 1.0];
    let n_max = config.n_max();
    let mut jobs = Vec::new();
    for a in VerifyConfig::set(o.a, &MONOTONE_ENDPOINTS) {
        for alpha in VerifyConfig::set(o.alpha, &fixed) {
            for gamma in VerifyConfig::set(o.gamma, &fixed) {
                let p = AngelescoParams::new(a, alpha, grid[0], gamma)?;
                for n in 1..=n_max {
                    jobs.push((p, n));
                }
            }
        }
    }
    let tol = config.tol();
    let cases = jobs
        .par_iter()
        .map(|(p, n)| {
            let mut case_inputs = inputs(p, *n);
            case_inputs["beta"] = json!("swept");
            match trajectory(p, Axis::Beta, &grid, *n, tol) {
                Ok(rows) => {
                    let (step, _) = worst_step(&rows, |j| j >= *n);
                    Case::new(
                        case_inputs,
                        Verdict::Info,
                        Some(step - MONOTONE_MARGIN),
                        trend_labels(&rows),
                    )
                }
                Err(e) => Case::new(case_inputs, Verdict::Info, None, e.to_string()),
            }
        })
        .collect();
    let grid_json = json!({
        "swept": "beta",
        "values": grid,
        "a": VerifyConfig::set(o.a, &MONOTONE_ENDPOINTS),
        "fixed": fixed,
        "n_max": n_max,
        "gating": false,
    });
    Ok((grid_json, cases))
}

fn symmetry(config: &VerifyConfig) -> Result<(Value, Vec<Case>)> {
    let exponents = config.symmetric_axes()?;
    let betas = VerifyConfig::set(config.overrides.beta, &EXPONENTS);
    let n_max = config.n_max();
    let mut jobs = Vec::new();
    for &e in &exponents {
        for &beta in &betas {
            let p = AngelescoParams::new(-1.0, e, beta, e)?;
            for n in 1..=n_max {
                jobs.push((p, n));
            }
        }
    }
    let tol = config.tol();
    let cases = jobs
        .par_iter()
        .map(|(p, n)| {
            let pair = cascade::diagonal_zeros(p, *n, tol)
                .and_then(|c| gram::type2_zeros(p, *n, *n).map(|g| (c, g)));
            match pair {
                Ok((c, g)) => {
                    let (dc, dg) = (c.symmetry_defect(), g.symmetry_defect());
                    Case::from_margin(
                        inputs(p, *n),
                        SYMMETRY_TOL - dc.max(dg),
                        format!("symmetry defect: cascade {dc:e}, gram {dg:e}"),
                    )
                }
                Err(e) => Case::failure(inputs(p, *n), e.to_string()),
            }
        })
        .collect();
    let grid_json = json!({
        "a": -1.0,
        "alpha_equals_gamma": exponents,
        "beta": betas,
        "n_max": n_max,
        "tolerance": SYMMETRY_TOL,
    });
    Ok((grid_json, cases))
}

fn decreasing_case(inputs: Value, result: Result<limits::LimitCheckResult>) -> Case {
    match result {
        Ok(r) => {
            let step = r
                .errors
                .windows(2)
                .map(|w| w[0] - w[1])
                .fold(f64::INFINITY, f64::min);
            Case::from_margin(
                inputs,
                step,
                format!("errors {:?}; ratios {:?}", r.errors, r.ratios),
            )
        }
        Err(e) => Case::failure(inputs, e.to_string()),
    }
}

fn limit_suite(config: &VerifyConfig) -> Result<(Value, Vec<Case>)> {
    let o = &config.overrides;
    let beta = o.beta.unwrap_or(0.0);
    let (alpha, a) = (o.alpha.unwrap_or(0.0), o.a.unwrap_or(-1.0));
    LaguerreHermiteParams::new(beta)?;
    limits::JacobiLaguerreParams::new(a, alpha, beta)?;
    let n_max = config.n_max();
    let mut cases = Vec::new();

    // n = 1 against the two closed forms: JA zero √((β+1)/(β+2A+3)), LH zero √((β+1)/2).
    let lh1 = limits::limit_check_lh(beta, 1, &LH_SCALES);
    let lh1_inputs =
        json!({"family": "laguerre-hermite", "n": 1, "beta": beta, "scales": LH_SCALES});
    match &lh1 {
        Ok(r) => {
            let expected = |big: f64| {
                ((big * (beta + 1.0) / (beta + 2.0 * big + 3.0)).sqrt()
                    - ((beta + 1.0) / 2.0).sqrt())
                .abs()
            };
            let deviation = r
                .scale_values
                .iter()
                .zip(&r.errors)
                .map(|(s, e)| (e - expected(*s)).abs())
                .fold(0.0, f64::max);
            cases.push(Case::from_margin(
                lh1_inputs.clone(),
                CLOSED_FORM_TOL - deviation,
                format!("largest deviation from closed-form error {deviation:e}"),
            ));
            let (lo, hi) = RATIO_BAND;
            let band = r
                .ratios
                .iter()
                .map(|q| (q - lo).min(hi - q))
                .fold(f64::INFINITY, f64::min);
            cases.push(Case::from_margin(
                lh1_inputs.clone(),
                band,
                format!("ratios {:?} against [{lo}, {hi}]", r.ratios),
            ));
        }
        Err(e) => cases.push(Case::failure(lh1_inputs.clone(), e.to_string())),
    }
    for n in 1..=n_max {
        let lh = if n == 1 {
            lh1.clone()
        } else {
            limits::limit_check_lh(beta, n, &LH_SCALES)
        };
        cases.push(decreasing_case(
            json!({"family": "laguerre-hermite", "n": n, "beta": beta, "scales": LH_SCALES}),
            lh,
        ));
        cases.push(decreasing_case(
            json!({"family": "jacobi-laguerre", "n": n, "a": a, "alpha": alpha, "beta": beta, "scales": JL_SCALES}),
            limits::limit_check_jl(alpha, beta, a, n, &JL_SCALES),
        ));
    }
    let grid = json!({
        "lh_scales": LH_SCALES,
        "jl_scales": JL_SCALES,
        "a": a,
        "alpha": alpha,
        "beta": beta,
        "n_max": n_max,
        "ratio_band": [RATIO_BAND.0, RATIO_BAND.1],
    });
    Ok((grid, cases))
}

fn corollaries(config: &VerifyConfig) -> Result<(Value, Vec<Case>)> {
    let o = &config.overrides;
    let mut grid = CorollaryGrid::default();
    if let Some(a) = o.a {
        limits::JacobiLaguerreParams::new(a, 0.0, 0.0)?;
        grid.jl_a = a;
    }
    if let Some(beta) = o.beta {
        LaguerreHermiteParams::new(beta)?;
        grid.jl_betas = vec![beta];
    }
    let lh_betas = VerifyConfig::set(o.beta, &LH_CLOSED_FORM_BETAS);
    let mut cases: Vec<Case> = lh_betas
        .par_iter()
        .map(|&beta| {
            let inputs =
                json!({"family": "laguerre-hermite", "n": 1, "beta": beta, "check": "closed form"});
            let expected = ((beta + 1.0) / 2.0).sqrt();
            match limits::lh_build(&LaguerreHermiteParams { beta }, 1, 1) {
                Ok((_, z)) => {
                    let d = (z.positive[0] - expected)
                        .abs()
                        .max((z.negative[0] + expected).abs());
                    Case::from_margin(
                        inputs,
                        CLOSED_FORM_TOL - d,
                        format!("zeros ±{expected} reproduced to {d:e}"),
                    )
                }
                Err(e) => Case::failure(inputs, e.to_string()),
            }
        })
        .collect();
    let report = limits::corollary_checks_with(config.n_max(), &grid)?;
    cases.extend(report.cases);
    let mut grid_json = serde_json::to_value(&grid).unwrap_or_default();
    grid_json["closed_form_betas"] = json!(lh_betas);
    grid_json["n_max"] = json!(config.n_max());
    Ok((grid_json, cases))
}

fn expansion(config: &VerifyConfig) -> Result<(Value, Vec<Case>)> {
    let betas = VerifyConfig::set(config.overrides.beta, &[0.0, 1.0]);
    let n_max = config.n_max();
    let mut jobs = Vec::new();
    for n in 1..=n_max {
        for &lambda in &EXPANSION_LAMBDAS {
            for &beta in &betas {
                jobs.push((n, lambda, beta));
            }
        }
    }
    let cases = jobs
        .par_iter()
        .map(|&(n, lambda, beta)| {
            let inputs = json!({"n": n, "lambda": lambda, "beta": beta});
            match classical::expansion_diagnostic(n, lambda, beta) {
                Ok(d) => Case::new(
                    inputs,
                    Verdict::Info,
                    None,
                    format!(
                        "monic coefficient difference {:e}; odd-coefficient residual {:e} \
                         (oracle {:e}); zero-set distance {:e}; real zeros of printed form {} of {}",
                        d.coefficient_difference,
                        d.evenness_residual,
                        d.oracle_evenness_residual,
                        d.zero_set_distance,
                        d.printed_real_zeros,
                        2 * n
                    ),
                ),
                Err(e) => Case::new(inputs, Verdict::Info, None, e.to_string()),
            }
        })
        .collect();
    let grid = json!({"n_max": n_max, "lambda": EXPANSION_LAMBDAS, "beta": betas, "gating": false});
    Ok((grid, cases))
}
