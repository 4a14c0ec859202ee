//! Zero computation, parameter sweeps and verification suites: everything the
//! command-line driver does apart from argument parsing and file I/O.

mod render;
mod suites;
#[cfg(feature = "svg")]
mod svg;
mod sweep;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cascade::{self, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::gram;
use crate::limits::{self, JacobiLaguerreParams, LaguerreHermiteParams};
use crate::polynomial::{MonicPolynomial, RootProduct, ZeroSet};
use crate::weight::AngelescoParams;

pub use render::{
    format_number, limit_csv, limit_json, report_json, sweep_csv, sweep_json, zeros_csv, zeros_json,
};
pub use suites::{run_suite, GridOverrides, Suite, VerifyConfig};
#[cfg(feature = "svg")]
pub use svg::sweep_svg;
pub use sweep::{run_sweep, SweepConfig, SweepResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    JacobiAngelesco,
    JacobiLaguerre,
    LaguerreHermite,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::JacobiAngelesco => "jacobi-angelesco",
            FamilyKind::JacobiLaguerre => "jacobi-laguerre",
            FamilyKind::LaguerreHermite => "laguerre-hermite",
        }
    }

    /// Reference lines for plots: the points the zeros can never cross.
    pub fn poles(self, a: f64) -> Vec<f64> {
        match self {
            FamilyKind::JacobiAngelesco => vec![a, 0.0, 1.0],
            FamilyKind::JacobiLaguerre => vec![a, 0.0],
            FamilyKind::LaguerreHermite => vec![0.0],
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ja" | "jacobi-angelesco" => Ok(FamilyKind::JacobiAngelesco),
            "jl" | "jacobi-laguerre" => Ok(FamilyKind::JacobiLaguerre),
            "lh" | "laguerre-hermite" => Ok(FamilyKind::LaguerreHermite),
            other => Err(Error::Config(format!(
                "unknown family '{other}' (expected ja, jl or lh)"
            ))),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `Cascade` is the Rodrigues ladder (diagonal Jacobi-Angelesco only);
/// `Gram` solves the orthogonality conditions directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Cascade,
    Gram,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cascade" => Ok(Method::Cascade),
            "gram" => Ok(Method::Gram),
            other => Err(Error::Config(format!(
                "unknown method '{other}' (expected cascade or gram)"
            ))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Cascade => "cascade",
            Method::Gram => "gram",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweptParameter {
    Alpha,
    Beta,
    Gamma,
}

impl SweptParameter {
    pub fn name(self) -> &'static str {
        match self {
            SweptParameter::Alpha => "alpha",
            SweptParameter::Beta => "beta",
            SweptParameter::Gamma => "gamma",
        }
    }
}

impl FromStr for SweptParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha" => Ok(SweptParameter::Alpha),
            "beta" => Ok(SweptParameter::Beta),
            "gamma" => Ok(SweptParameter::Gamma),
            other => Err(Error::Config(format!(
                "unknown parameter '{other}' (expected alpha, beta or gamma)"
            ))),
        }
    }
}

/// Raw parameter values shared by all three families. Jacobi-Laguerre
/// ignores `gamma`; Laguerre-Hermite uses only `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub a: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl Default for FamilyParams {
    fn default() -> Self {
        Self {
            a: -1.0,
            alpha: 0.0,
            beta: 0.0,
            gamma: 0.0,
        }
    }
}

impl FamilyParams {
    pub fn with(mut self, parameter: SweptParameter, value: f64) -> Self {
        match parameter {
            SweptParameter::Alpha => self.alpha = value,
            SweptParameter::Beta => self.beta = value,
            SweptParameter::Gamma => self.gamma = value,
        }
        self
    }

    pub fn angelesco(&self) -> Result<AngelescoParams> {
        AngelescoParams::new(self.a, self.alpha, self.beta, self.gamma)
    }

    pub fn jacobi_laguerre(&self) -> Result<JacobiLaguerreParams> {
        JacobiLaguerreParams::new(self.a, self.alpha, self.beta)
    }

    pub fn laguerre_hermite(&self) -> Result<LaguerreHermiteParams> {
        LaguerreHermiteParams::new(self.beta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZerosConfig {
    pub family: FamilyKind,
    pub params: FamilyParams,
    /// Diagonal index: the polynomial has degree `2n`.
    pub n: usize,
    pub method: Method,
    /// Bracket-solver tolerance for the cascade.
    pub tol: f64,
}

impl ZerosConfig {
    pub fn new(family: FamilyKind, params: FamilyParams, n: usize) -> Self {
        Self {
            family,
            params,
            n,
            method: Method::Cascade,
            tol: DEFAULT_TOL,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_common(self.family, self.method, self.n, self.tol)?;
        match self.family {
            FamilyKind::JacobiAngelesco => self.params.angelesco().map(drop),
            FamilyKind::JacobiLaguerre => self.params.jacobi_laguerre().map(drop),
            FamilyKind::LaguerreHermite => self.params.laguerre_hermite().map(drop),
        }
    }
}

fn check_common(family: FamilyKind, method: Method, n: usize, tol: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::Config("n must be at least 1".into()));
    }
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::Config(format!("tol must be positive, got {tol}")));
    }
    if method == Method::Cascade && family != FamilyKind::JacobiAngelesco {
        return Err(Error::Config(format!(
            "the cascade only applies to jacobi-angelesco; use --method gram for {family}"
        )));
    }
    Ok(())
}

/// Zeros plus the orthogonality residual of the polynomial they came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZerosOutput {
    pub config: ZerosConfig,
    pub zeros: ZeroSet,
    pub residual: f64,
}

/// Zeros of the degree-`2n` diagonal polynomial of the chosen family.
pub fn zeros_at(
    family: FamilyKind,
    params: &FamilyParams,
    n: usize,
    method: Method,
    tol: f64,
) -> Result<ZeroSet> {
    match (family, method) {
        (FamilyKind::JacobiAngelesco, Method::Cascade) => {
            cascade::diagonal_zeros(&params.angelesco()?, n, tol)
        }
        (FamilyKind::JacobiAngelesco, Method::Gram) => {
            gram::type2_zeros(&params.angelesco()?, n, n)
        }
        (FamilyKind::JacobiLaguerre, _) => {
            Ok(limits::jl_build(&params.jacobi_laguerre()?, n, n)?.1)
        }
        (FamilyKind::LaguerreHermite, _) => {
            Ok(limits::lh_build(&params.laguerre_hermite()?, n, n)?.1)
        }
    }
}

pub fn compute_zeros(config: &ZerosConfig) -> Result<ZerosOutput> {
    config.validate()?;
    let n = config.n;
    let (zeros, residual) = match (config.family, config.method) {
        (FamilyKind::JacobiAngelesco, Method::Cascade) => {
            let p = config.params.angelesco()?;
            let zeros = cascade::diagonal_zeros(&p, n, config.tol)?;
            let product = MonicPolynomial::from_roots(&zeros.all());
            let residual = gram::orthogonality_residual(&product, &p, n, n)?;
            (zeros, residual)
        }
        (FamilyKind::JacobiAngelesco, Method::Gram) => {
            let p = config.params.angelesco()?;
            let zeros = gram::type2_zeros(&p, n, n)?;
            let product = RootProduct::from(&zeros);
            (zeros, gram::orthogonality_residual(&product, &p, n, n)?)
        }
        (FamilyKind::JacobiLaguerre, _) => {
            let p = config.params.jacobi_laguerre()?;
            let (_, zeros) = limits::jl_build(&p, n, n)?;
            let product = RootProduct::from(&zeros);
            (
                zeros,
                limits::jl_orthogonality_residual(&product, &p, n, n)?,
            )
        }
        (FamilyKind::LaguerreHermite, _) => {
            let p = config.params.laguerre_hermite()?;
            let (poly, zeros) = limits::lh_build(&p, n, n)?;
            (
                zeros,
                limits::lh_orthogonality_residual(&poly, p.beta, n, n),
            )
        }
    };
    Ok(ZerosOutput {
        config: *config,
        zeros,
        residual,
    })
}
