//! `angelesco`: zeros, parameter sweeps, verification suites and limit
//! checks for Jacobi-Angelesco and related multiple orthogonal polynomials.
//!
//! Exit status: 0 pass, 1 verification failure, 2 usage or configuration
//! error, 3 solver failure.

use std::path::PathBuf;
use std::process::ExitCode;

use angelesco::lab::{
    self, FamilyKind, FamilyParams, GridOverrides, Method, Suite, SweepConfig, SweptParameter,
    VerifyConfig, ZerosConfig,
};
use angelesco::limits;
use angelesco::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "angelesco", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Zeros of the diagonal polynomial of degree 2n.
    #[command(allow_negative_numbers = true)]
    Zeros(ZerosArgs),
    /// Zero trajectories along one exponent.
    #[command(allow_negative_numbers = true)]
    Sweep(SweepArgs),
    /// Run a verification suite and write a JSON report.
    #[command(allow_negative_numbers = true)]
    Verify(VerifyArgs),
    /// Scaling-limit errors against the Jacobi-Laguerre or Laguerre-Hermite zeros.
    #[command(allow_negative_numbers = true)]
    Limits(LimitsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "ja", alias = "jacobi-angelesco")]
    Ja,
    #[value(name = "jl", alias = "jacobi-laguerre")]
    Jl,
    #[value(name = "lh", alias = "laguerre-hermite")]
    Lh,
}

impl From<FamilyArg> for FamilyKind {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Ja => FamilyKind::JacobiAngelesco,
            FamilyArg::Jl => FamilyKind::JacobiLaguerre,
            FamilyArg::Lh => FamilyKind::LaguerreHermite,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Cascade,
    Gram,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Cascade => Method::Cascade,
            MethodArg::Gram => Method::Gram,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ParamArg {
    Alpha,
    Beta,
    Gamma,
}

impl From<ParamArg> for SweptParameter {
    fn from(p: ParamArg) -> Self {
        match p {
            ParamArg::Alpha => SweptParameter::Alpha,
            ParamArg::Beta => SweptParameter::Beta,
            ParamArg::Gamma => SweptParameter::Gamma,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long, value_enum, default_value = "ja")]
    family: FamilyArg,
    /// Left endpoint, negative.
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
}

impl ParamArgs {
    fn params(&self) -> FamilyParams {
        let d = FamilyParams::default();
        FamilyParams {
            a: self.a.unwrap_or(d.a),
            alpha: self.alpha.unwrap_or(d.alpha),
            beta: self.beta.unwrap_or(d.beta),
            gamma: self.gamma.unwrap_or(d.gamma),
        }
    }
}

#[derive(Args)]
struct SolverArgs {
    /// Diagonal index; the polynomial has degree 2n.
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Defaults to cascade for ja and gram otherwise.
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Bracket-solver tolerance for the cascade.
    #[arg(long, default_value_t = angelesco::cascade::DEFAULT_TOL)]
    tol: f64,
}

impl SolverArgs {
    fn method(&self, family: FamilyKind) -> Method {
        match (self.method, family) {
            (Some(m), _) => m.into(),
            (None, FamilyKind::JacobiAngelesco) => Method::Cascade,
            (None, _) => Method::Gram,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ZerosArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    solver: SolverArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    solver: SolverArgs,
    /// Exponent to sweep.
    #[arg(long, value_enum)]
    param: ParamArg,
    #[arg(long)]
    from: f64,
    #[arg(long)]
    to: f64,
    /// Number of grid points, endpoints included.
    #[arg(long, default_value_t = 31)]
    steps: usize,
    #[command(flatten)]
    output: OutputArgs,
    /// Also draw the trajectories to this SVG file.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// interlacing, oracle-equivalence, monotone-alpha, monotone-gamma,
    /// monotone-beta-symmetric, monotone-beta-exploratory, symmetry, limits,
    /// corollaries or expansion-diagnostic.
    #[arg(long)]
    suite: String,
    /// Largest diagonal index; each suite has its own default.
    #[arg(long)]
    n_max: Option<usize>,
    /// Fix the endpoint instead of using the suite's grid.
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    /// Swept range for the monotonicity suites.
    #[arg(long)]
    from: Option<f64>,
    #[arg(long)]
    to: Option<f64>,
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    /// Reports are always JSON.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LimitsArgs {
    /// jl compares the γ-scaling, lh the α = γ = A scaling.
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value_t = -1.0)]
    a: f64,
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    #[arg(long, default_value_t = 0.0)]
    beta: f64,
    /// Ascending scale values, comma separated (γ for jl, A for lh).
    #[arg(long, value_delimiter = ',')]
    scales: Option<Vec<f64>>,
    #[command(flatten)]
    output: OutputArgs,
}

/// Failure modes mapped onto exit codes.
enum Failure {
    Usage(String),
    Solver(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Solver(e.to_string())
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn zeros(args: ZerosArgs) -> Result<(), Failure> {
    let family: FamilyKind = args.params.family.into();
    let config = ZerosConfig {
        family,
        params: args.params.params(),
        n: args.solver.n,
        method: args.solver.method(family),
        tol: args.solver.tol,
    };
    let output = lab::compute_zeros(&config)?;
    eprintln!(
        "{} n = {} via {}: orthogonality residual {:e}",
        family, config.n, config.method, output.residual
    );
    let text = match args.output.format {
        Format::Csv => lab::zeros_csv(&output),
        Format::Json => lab::zeros_json(&output),
    };
    emit(&text, args.output.out.as_ref())
}

fn sweep(args: SweepArgs) -> Result<(), Failure> {
    let family: FamilyKind = args.params.family.into();
    let mut config = SweepConfig::new(
        family,
        args.param.into(),
        args.from,
        args.to,
        args.steps,
        args.params.params(),
        args.solver.n,
    );
    config.method = args.solver.method(family);
    config.tol = args.solver.tol;
    config.validate()?;
    #[cfg(not(feature = "svg"))]
    if args.svg.is_some() {
        return Err(Failure::Usage("this build has no SVG support".into()));
    }
    let result = lab::run_sweep(&config)?;
    for (j, trend) in result.trends.iter().enumerate() {
        eprintln!("z{}: {}", j + 1, trend.label());
    }
    let text = match args.output.format {
        Format::Csv => lab::sweep_csv(&result),
        Format::Json => lab::sweep_json(&result),
    };
    emit(&text, args.output.out.as_ref())?;
    #[cfg(feature = "svg")]
    if let Some(path) = &args.svg {
        std::fs::write(path, lab::sweep_svg(&result))
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    if args.format != Format::Json {
        return Err(Failure::Usage("verification reports are JSON only".into()));
    }
    let suite: Suite = args.suite.parse()?;
    let config = VerifyConfig {
        suite,
        n_max: args.n_max,
        overrides: GridOverrides {
            a: args.a,
            alpha: args.alpha,
            beta: args.beta,
            gamma: args.gamma,
            from: args.from,
            to: args.to,
            steps: args.steps,
            tol: args.tol,
        },
    };
    let report = lab::run_suite(&config)?;
    let failed = report.failures().count();
    eprintln!(
        "{}: {} cases, {} failed, {} in {:.2} s",
        report.suite,
        report.cases.len(),
        failed,
        if report.pass { "pass" } else { "FAIL" },
        report.elapsed_seconds
    );
    for case in report.failures().take(5) {
        eprintln!("  failed: {} ({})", case.inputs, case.detail);
    }
    let mut text = lab::report_json(&report).map_err(|e| Failure::Solver(e.to_string()))?;
    text.push('\n');
    emit(&text, args.out.as_ref())?;
    if report.pass || !suite.gates() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn limit_check(args: LimitsArgs) -> Result<(), Failure> {
    let result = match args.family {
        FamilyArg::Ja => {
            return Err(Failure::Usage(
                "limits compares against jl or lh; choose --family jl or --family lh".into(),
            ))
        }
        FamilyArg::Jl => {
            let scales = args
                .scales
                .unwrap_or_else(|| vec![50.0, 100.0, 200.0, 400.0]);
            limits::limit_check_jl(args.alpha, args.beta, args.a, args.n, &scales)?
        }
        FamilyArg::Lh => {
            let scales = args
                .scales
                .unwrap_or_else(|| vec![50.0, 100.0, 200.0, 400.0, 800.0]);
            limits::limit_check_lh(args.beta, args.n, &scales)?
        }
    };
    if !result.strictly_decreasing() {
        eprintln!("warning: errors are not strictly decreasing");
    }
    let text = match args.output.format {
        Format::Csv => lab::limit_csv(&result),
        Format::Json => lab::limit_json(&result),
    };
    emit(&text, args.output.out.as_ref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Zeros(args) => zeros(args),
        Command::Sweep(args) => sweep(args),
        Command::Verify(args) => verify(args),
        Command::Limits(args) => limit_check(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Solver(msg)) => {
            eprintln!("solver failure: {msg}");
            ExitCode::from(3)
        }
    }
}
