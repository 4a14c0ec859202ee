use std::process::{Command, Output};

fn angelesco(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_angelesco"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}

#[test]
fn zeros_of_the_legendre_like_case() {
    let out = angelesco(&[
        "zeros", "--family", "ja", "--a", "-1", "--alpha", "0", "--beta", "0", "--gamma", "0",
        "--n", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("z1,z2\n"));
    let row = &csv_rows(&text)[0];
    let r = 1.0 / 3f64.sqrt();
    assert!((row[0] + r).abs() <= 1e-12 && (row[1] - r).abs() <= 1e-12);
}

#[test]
fn cascade_and_gram_agree() {
    let base = [
        "zeros", "--a", "-0.5", "--alpha", "0.5", "--beta", "2", "--gamma", "-0.5", "--n", "4",
    ];
    let run = |method: &str| {
        let mut args = base.to_vec();
        args.extend(["--method", method]);
        let out = angelesco(&args);
        assert_eq!(out.status.code(), Some(0));
        csv_rows(&stdout(&out)).remove(0)
    };
    let (c, g) = (run("cascade"), run("gram"));
    assert_eq!(c.len(), 8);
    for (x, y) in c.iter().zip(&g) {
        assert!((x - y).abs() <= 1e-10, "{x} vs {y}");
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["zeros", "--alpha", "-2"],
        vec!["zeros", "--a", "0.5"],
        vec!["zeros", "--family", "lh", "--method", "cascade"],
        vec!["zeros", "--n", "0"],
        vec!["sweep", "--param", "alpha", "--from", "3", "--to", "1"],
        vec![
            "sweep", "--param", "gamma", "--from", "0", "--to", "1", "--family", "lh",
        ],
        vec!["verify", "--suite", "no-such-suite"],
        vec!["verify", "--suite", "monotone-alpha", "--alpha", "1"],
        vec!["limits", "--family", "ja"],
        vec!["zeros", "--bogus"],
    ] {
        let out = angelesco(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn sweep_is_deterministic_and_formats_agree() {
    let dir = tempfile::tempdir().unwrap();
    let csv_a = dir.path().join("a.csv");
    let csv_b = dir.path().join("b.csv");
    let json = dir.path().join("a.json");
    let args = |out: &std::path::Path, format: &str| {
        vec![
            "sweep".to_string(),
            "--param".into(),
            "gamma".into(),
            "--from".into(),
            "0".into(),
            "--to".into(),
            "3".into(),
            "--steps".into(),
            "31".into(),
            "--n".into(),
            "2".into(),
            "--format".into(),
            format.into(),
            "--out".into(),
            out.to_str().unwrap().into(),
        ]
    };
    for (path, format) in [(&csv_a, "csv"), (&csv_b, "csv"), (&json, "json")] {
        let a = args(path, format);
        let out = angelesco(&a.iter().map(String::as_str).collect::<Vec<_>>());
        assert_eq!(out.status.code(), Some(0));
    }
    let a = std::fs::read(&csv_a).unwrap();
    assert_eq!(a, std::fs::read(&csv_b).unwrap());
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("param,z1,z2,z3,z4\n"));
    assert!(!text.contains('\r'));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 31);
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row[0], value["grid"][i].as_f64().unwrap());
        for j in 0..4 {
            assert_eq!(row[j + 1], value["zeros"][i][j].as_f64().unwrap());
        }
    }
    for t in value["trends"].as_array().unwrap() {
        assert_eq!(t, "strictly-decreasing");
    }
}

#[test]
fn sweep_reports_trends_on_stderr() {
    let out = angelesco(&[
        "sweep", "--param", "beta", "--from", "0", "--to", "3", "--steps", "31", "--a", "-1",
        "--alpha", "1", "--gamma", "1", "--n", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("z1: strictly-decreasing"));
    assert!(err.contains("z2: strictly-decreasing"));
    assert!(err.contains("z3: strictly-increasing"));
    assert!(err.contains("z4: strictly-increasing"));
}

#[cfg(feature = "svg")]
#[test]
fn sweep_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("t.svg");
    let out = angelesco(&[
        "sweep",
        "--param",
        "alpha",
        "--from",
        "0",
        "--to",
        "3",
        "--n",
        "2",
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(svg).unwrap();
    assert_eq!(text.matches("<polyline").count(), 4);
}

fn report(args: &[&str]) -> (Option<i32>, serde_json::Value) {
    let out = angelesco(args);
    let value = serde_json::from_slice(&out.stdout).unwrap_or_default();
    (out.status.code(), value)
}

#[test]
fn verify_suites() {
    let (code, value) = report(&["verify", "--suite", "interlacing", "--n-max", "5"]);
    assert_eq!(code, Some(0));
    assert_eq!(value["suite"], "interlacing");
    assert_eq!(value["pass"], true);
    for key in ["grid", "cases", "elapsed_seconds"] {
        assert!(value.get(key).is_some(), "{key}");
    }
    let case = &value["cases"][0];
    for key in ["inputs", "verdict", "margin", "detail"] {
        assert!(case.get(key).is_some(), "{key}");
    }

    let (code, value) = report(&["verify", "--suite", "oracle-equivalence", "--n-max", "6"]);
    assert_eq!(code, Some(0));
    assert!(value["cases"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["margin"].as_f64().unwrap() > 0.0));

    let (code, _) = report(&[
        "verify",
        "--suite",
        "monotone-beta-symmetric",
        "--a",
        "-0.5",
    ]);
    assert_eq!(code, Some(2));
}

#[test]
fn expansion_diagnostic_exits_zero() {
    let (code, value) = report(&["verify", "--suite", "expansion-diagnostic"]);
    assert_eq!(code, Some(0));
    assert_eq!(value["cases"].as_array().unwrap().len(), 24);
}

#[test]
fn failing_verification_exits_1() {
    let (code, _) = report(&["verify", "--suite", "symmetry", "--tol", "-1"]);
    assert_eq!(code, Some(2));
    // A loose bracket tolerance stops the cascade early enough to break the oracle match.
    let (code, value) = report(&[
        "verify",
        "--suite",
        "oracle-equivalence",
        "--n-max",
        "3",
        "--a",
        "-1",
        "--tol",
        "0.5",
    ]);
    assert_eq!(code, Some(1));
    assert_eq!(value["pass"], false);
}

#[test]
fn limits_table() {
    let out = angelesco(&["limits", "--family", "lh", "--scales", "100,200"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "scale,error,ratio");
    let err: f64 = rows[1].split(',').nth(1).unwrap().parse().unwrap();
    assert!((err - 0.005244).abs() < 1e-6);
    let out = angelesco(&["limits", "--family", "jl", "--n", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["errors"].as_array().unwrap().len(), 4);
}
