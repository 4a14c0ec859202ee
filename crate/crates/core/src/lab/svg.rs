//! Zero trajectories as a standalone SVG document.

use std::fmt::Write;

use super::SweepResult;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN: f64 = 60.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

fn label(v: f64) -> String {
    // Tick labels only; the data files keep full precision.
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

/// One polyline per zero against the swept parameter, with the poles
/// (`a`, `0`, `1` as they apply to the family) drawn as dashed lines.
pub fn sweep_svg(result: &SweepResult) -> String {
    let config = &result.config;
    let poles = config.family.poles(config.params.a);
    let values = result.zeros.iter().flatten().chain(&poles).copied();
    let (mut lo, mut hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), v| {
        (l.min(v), h.max(v))
    });
    let pad = 0.05 * (hi - lo).max(1e-12);
    lo -= pad;
    hi += pad;
    let (x0, x1) = (config.from, config.to);
    let px = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let py = |y: f64| HEIGHT - MARGIN - (y - lo) / (hi - lo) * (HEIGHT - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        s,
        r#"<title>{} zeros, n = {}, swept {}</title>"#,
        config.family,
        config.n,
        config.parameter.name()
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (left, right, top, bottom) = (MARGIN, WIDTH - MARGIN, MARGIN, HEIGHT - MARGIN);
    let _ = writeln!(
        s,
        r#"<rect x="{left}" y="{top}" width="{}" height="{}" fill="none" stroke="black"/>"#,
        right - left,
        bottom - top
    );
    let pole_names = ["a", "0", "1"];
    for (pole, name) in poles.iter().zip(pole_names) {
        let y = py(*pole);
        let _ = writeln!(
            s,
            r##"<line x1="{left}" y1="{y:.2}" x2="{right}" y2="{y:.2}" stroke="#888" stroke-dasharray="6 4"/>"##
        );
        let text = if name == "a" {
            format!("a = {}", label(*pole))
        } else {
            format!("x = {name}")
        };
        let _ = writeln!(
            s,
            r##"<text x="{}" y="{:.2}" fill="#555">{text}</text>"##,
            right + 4.0,
            y + 4.0
        );
    }
    for j in 0..2 * config.n {
        let points: Vec<String> = result
            .grid
            .iter()
            .zip(&result.zeros)
            .map(|(x, row)| format!("{:.2},{:.2}", px(*x), py(row[j])))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke="{}" stroke-width="1.5" points="{}"><title>z{}</title></polyline>"#,
            PALETTE[j % PALETTE.len()],
            points.join(" "),
            j + 1
        );
    }
    for (x, anchor) in [(x0, "start"), (x1, "end")] {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{}" text-anchor="{anchor}">{}</text>"#,
            px(x),
            bottom + 16.0,
            label(x)
        );
    }
    for y in [lo + pad, hi - pad] {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{:.2}" text-anchor="end">{}</text>"#,
            left - 6.0,
            py(y) + 4.0,
            label(y)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        HEIGHT - 16.0,
        config.parameter.name()
    );
    let _ = writeln!(
        s,
        r#"<text x="16" y="{}" text-anchor="middle" transform="rotate(-90 16 {})">zero location</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    );
    s.push_str("</svg>\n");
    s
}
