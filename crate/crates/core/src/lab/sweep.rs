use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check_common, zeros_at, FamilyKind, FamilyParams, Method, SweptParameter};
use crate::cascade::DEFAULT_TOL;
use crate::error::{Error, Result};
use crate::report::{classify_trend, linspace, Trend};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub family: FamilyKind,
    pub parameter: SweptParameter,
    pub from: f64,
    pub to: f64,
    /// Number of grid points, endpoints included.
    pub steps: usize,
    pub params: FamilyParams,
    pub n: usize,
    pub method: Method,
    pub tol: f64,
}

impl SweepConfig {
    pub fn new(
        family: FamilyKind,
        parameter: SweptParameter,
        from: f64,
        to: f64,
        steps: usize,
        params: FamilyParams,
        n: usize,
    ) -> Self {
        let method = if family == FamilyKind::JacobiAngelesco {
            Method::Cascade
        } else {
            Method::Gram
        };
        Self {
            family,
            parameter,
            from,
            to,
            steps,
            params,
            n,
            method,
            tol: DEFAULT_TOL,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_common(self.family, self.method, self.n, self.tol)?;
        if !(self.from.is_finite() && self.to.is_finite() && self.from < self.to) {
            return Err(Error::Config(format!(
                "sweep range needs from < to, got [{}, {}]",
                self.from, self.to
            )));
        }
        if self.steps < 2 {
            return Err(Error::Config("steps must be at least 2".into()));
        }
        if !(self.from > -1.0) {
            return Err(Error::Config(format!(
                "{} must exceed -1 across the sweep, got from = {}",
                self.parameter.name(),
                self.from
            )));
        }
        let allowed = match self.family {
            FamilyKind::JacobiAngelesco => true,
            FamilyKind::JacobiLaguerre => self.parameter != SweptParameter::Gamma,
            FamilyKind::LaguerreHermite => self.parameter == SweptParameter::Beta,
        };
        if !allowed {
            return Err(Error::Config(format!(
                "{} has no parameter {}",
                self.family,
                self.parameter.name()
            )));
        }
        // The fixed parameters must be valid on their own.
        let probe = self.params.with(self.parameter, self.from);
        match self.family {
            FamilyKind::JacobiAngelesco => probe.angelesco().map(drop),
            FamilyKind::JacobiLaguerre => probe.jacobi_laguerre().map(drop),
            FamilyKind::LaguerreHermite => probe.laguerre_hermite().map(drop),
        }
    }

    pub fn grid(&self) -> Vec<f64> {
        linspace(self.from, self.to, self.steps)
    }
}

/// Zeros along the grid, one row per grid point in grid order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub config: SweepConfig,
    pub grid: Vec<f64>,
    /// `zeros[i]` holds the `2n` ascending zeros at `grid[i]`.
    pub zeros: Vec<Vec<f64>>,
    /// One trend per zero column.
    pub trends: Vec<Trend>,
}

impl SweepResult {
    pub fn column(&self, j: usize) -> Vec<f64> {
        self.zeros.iter().map(|row| row[j]).collect()
    }
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepResult> {
    config.validate()?;
    let grid = config.grid();
    let zeros = grid
        .par_iter()
        .map(|&v| {
            let params = config.params.with(config.parameter, v);
            zeros_at(config.family, &params, config.n, config.method, config.tol).map(|z| z.all())
        })
        .collect::<Result<Vec<_>>>()?;
    let mut result = SweepResult {
        config: *config,
        grid,
        zeros,
        trends: Vec::new(),
    };
    result.trends = (0..2 * config.n)
        .map(|j| classify_trend(&result.column(j)))
        .collect();
    Ok(result)
}
