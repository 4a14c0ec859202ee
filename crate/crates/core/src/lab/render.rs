use serde_json::json;

use super::{SweepResult, ZerosOutput};
use crate::limits::LimitCheckResult;
use crate::report::VerificationReport;

/// Shortest decimal string that parses back to the same `f64`.
pub fn format_number(x: f64) -> String {
    format!("{x:?}")
}

fn csv_line(out: &mut String, fields: impl IntoIterator<Item = String>) {
    let fields: Vec<String> = fields.into_iter().collect();
    out.push_str(&fields.join(","));
    out.push('\n');
}

fn zero_header(count: usize) -> impl Iterator<Item = String> {
    (1..=count).map(|j| format!("z{j}"))
}

pub fn zeros_csv(output: &ZerosOutput) -> String {
    let zeros = output.zeros.all();
    let mut out = String::new();
    csv_line(&mut out, zero_header(zeros.len()));
    csv_line(&mut out, zeros.into_iter().map(format_number));
    out
}

pub fn zeros_json(output: &ZerosOutput) -> String {
    let value = json!({
        "family": output.config.family,
        "method": output.config.method,
        "params": output.config.params,
        "n": output.config.n,
        "tol": output.config.tol,
        "zeros": output.zeros.all(),
        "negative": output.zeros.negative,
        "positive": output.zeros.positive,
        "residual": output.residual,
    });
    pretty(&value)
}

/// Header `param,z1,...,z2n`, then one row per grid point.
pub fn sweep_csv(result: &SweepResult) -> String {
    let mut out = String::new();
    csv_line(
        &mut out,
        std::iter::once("param".to_string()).chain(zero_header(2 * result.config.n)),
    );
    for (v, row) in result.grid.iter().zip(&result.zeros) {
        csv_line(
            &mut out,
            std::iter::once(format_number(*v)).chain(row.iter().map(|z| format_number(*z))),
        );
    }
    out
}

pub fn sweep_json(result: &SweepResult) -> String {
    let value = json!({
        "config": result.config,
        "param": result.config.parameter,
        "grid": result.grid,
        "zeros": result.zeros,
        "trends": result.trends.iter().map(|t| t.label()).collect::<Vec<_>>(),
    });
    pretty(&value)
}

pub fn report_json(report: &VerificationReport) -> serde_json::Result<String> {
    serde_json::to_string_pretty(report)
}

pub fn limit_csv(result: &LimitCheckResult) -> String {
    let mut out = String::from("scale,error,ratio\n");
    for (i, (s, e)) in result.scale_values.iter().zip(&result.errors).enumerate() {
        let ratio = match i {
            0 => String::new(),
            _ => format_number(result.ratios[i - 1]),
        };
        csv_line(&mut out, [format_number(*s), format_number(*e), ratio]);
    }
    out
}

pub fn limit_json(result: &LimitCheckResult) -> String {
    pretty(&serde_json::to_value(result).unwrap_or_default())
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).unwrap_or_default();
    s.push('\n');
    s
}
