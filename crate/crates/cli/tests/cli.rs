use std::path::PathBuf;
use std::process::{Command, Output};

use robin_lab::commands::sweep_rows;
use robin_lab::config::{Range, SweepParam};
use robin_lab::Cell;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_robin-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn disk_json_lambda_in_range() {
    let o = run(&["disk", "--alpha", "-1", "--R", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let l = v["lambda"].as_f64().unwrap();
    assert!(-1.0 < l && l < 0.0);
    assert!(stdout(&o).contains("\"lambda\": -3.5408060665860"));
}

#[test]
fn disk_repulsive_is_domain_error() {
    let o = run(&["disk", "--alpha", "0.5", "--R", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no discrete eigenvalue for alpha ≥ 0"));
    assert!(o.stdout.is_empty());
}

#[test]
fn disk_csv_is_one_row_with_header() {
    let o = run(&["disk", "--alpha", "-1", "--R", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("alpha,R,lambda,k,lower_bound,upper_bound"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["sweep", "--param", "alpha", "--from", "-1", "--to", "-1", "--R", "1"],
        vec!["sweep", "--param", "R", "--from", "0.5", "--to", "2", "--points", "1", "--alpha", "-1"],
        vec!["sweep", "--param", "alpha", "--from", "-2", "--to", "-1"],
        vec!["disk", "--alpha", "-1"],
        vec!["--bogus"],
        vec!["frobnicate"],
        vec![],
        vec!["shape", "disk", "--R", "1", "--alpha", "-1", "--Ns", "0"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&["sweep", "--help"]).status.code(), Some(0));
}

#[test]
fn domain_errors_exit_two() {
    let o = run(&["shape", "support-poly", "--coeffs", "1,0,0.5", "--alpha", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not strictly convex"));
    assert_eq!(run(&["counterexample", "3d", "--r", "1.5", "--R", "1"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--param", "alpha", "--from", "-1", "--to", "1", "--R", "1"]).status.code(), Some(2));
    assert_eq!(run(&["disk", "--alpha", "-1", "--R", "-2"]).status.code(), Some(2));
}

#[test]
fn alpha_sweep_increasing_and_r_sweep_decreasing() {
    let o = run(&["sweep", "--param", "alpha", "--from", "-4", "--to", "-0.25", "--R", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json(&o);
    let ls: Vec<f64> = rows.as_array().unwrap().iter().map(|r| r["lambda"].as_f64().unwrap()).collect();
    assert_eq!(ls.len(), 100);
    assert!(ls.windows(2).all(|w| w[1] > w[0]));

    let o = run(&["sweep", "--param", "R", "--from", "0.25", "--to", "4", "--alpha", "-1", "--format", "csv"]);
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let headers: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(headers, ["param", "lambda", "lower_bound", "upper_bound", "derivative"]);
    let ls: Vec<f64> = rdr.records().map(|r| r.unwrap()[1].parse().unwrap()).collect();
    assert!(ls.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn csv_round_trips_bit_exactly() {
    let range = Range { from: -6.0, to: -0.1, points: 37 };
    let expected = sweep_rows(SweepParam::Alpha, &range, 0.7).unwrap();
    let o = run(&["sweep", "--param", "alpha", "--from", "-6", "--to", "-0.1", "--points", "37", "--R", "0.7", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let parsed: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(parsed.len(), expected.len());
    for (row, rec) in parsed.iter().zip(&expected) {
        for (field, (_, cell)) in row.iter().zip(&rec.0) {
            let Cell::Num(x) = cell else { panic!("sweep cells are numeric") };
            assert_eq!(field.parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["sweep", "--param", "R", "--from", "0.1", "--to", "9", "--points", "64", "--alpha", "-3"];
    let outs: Vec<Vec<u8>> = ["1", "3", "8"]
        .iter()
        .map(|n| bin().args(args).env("ROBIN_LAB_THREADS", n).output().unwrap().stdout)
        .collect();
    assert!(!outs[0].is_empty());
    assert!(outs.windows(2).all(|w| w[0] == w[1]));
    let bad = bin().args(args).env("ROBIN_LAB_THREADS", "zero").output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn config_file_matches_command_line() {
    let cfg = scratch("disk_config.json");
    std::fs::write(&cfg, r#"{"command": "disk", "alpha": -2.5, "R": 0.4, "format": "csv"}"#).unwrap();
    let a = run(&["--config", cfg.to_str().unwrap()]);
    let b = run(&["disk", "--alpha", "-2.5", "--R", "0.4", "--format", "csv"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let cfg = scratch("sweep_config.json");
    std::fs::write(
        &cfg,
        r#"{"command": "sweep", "param": "R", "range": {"from": 1, "to": 2, "points": 5}, "alpha": -1}"#,
    )
    .unwrap();
    let o = run(&["--config", cfg.to_str().unwrap()]);
    assert_eq!(json(&o).as_array().unwrap().len(), 5);

    let bad = scratch("bad_config.json");
    std::fs::write(&bad, r#"{"command": "disk", "alpha": "x"}"#).unwrap();
    assert_eq!(run(&["--config", bad.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run(&["--config", "/nonexistent/robin.json"]).status.code(), Some(1));
}

#[test]
fn output_flag_writes_file() {
    let path = scratch("disk_out.json");
    let o = run(&["disk", "--alpha", "-1", "--R", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(v["lambda"].as_f64().unwrap() < 0.0);
}

#[test]
fn shape_reports() {
    let o = run(&["shape", "ellipse", "--a", "2", "--b", "1", "--alpha", "-1", "--Ns", "32", "--Nt", "128"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!(v["margin_isoperimetric"].as_f64().unwrap() > v["tolerance"].as_f64().unwrap());
    assert!(v["margin_isochoric"].as_f64().unwrap() > v["tolerance"].as_f64().unwrap());
    assert_eq!(v["verdict"], "strict");

    let o = run(&["shape", "disk", "--R", "1", "--alpha", "-1", "--Ns", "16", "--Nt", "128"]);
    let v = json(&o);
    assert!(v["margin_isoperimetric"].as_f64().unwrap().abs() <= v["tolerance"].as_f64().unwrap());
    assert_eq!(v["verdict"], "equality");

    let o = run(&["shape", "support-poly", "--coeffs", "1,0,0.1", "--alpha", "-2", "--Ns", "32", "--Nt", "128"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["shape"], "support-poly(1,0,0.1)");
}

#[test]
fn counterexample_reports() {
    let v = json(&run(&["counterexample", "2d", "--r3", "1", "--alpha", "-50"]));
    assert_eq!(v["reversed"], true);
    assert_eq!(v["asymptotic"], true);
    assert!(v["crossover_alpha"].is_null());
    let v = json(&run(&["counterexample", "3d", "--r", "0.3", "--R", "1", "--alpha", "-100"]));
    assert_eq!(v["reversed"], true);
    assert_eq!(v["criterion"], true);
    let v = json(&run(&["counterexample", "3d", "--r", "0.6", "--R", "1"]));
    assert_eq!(v["criterion"], false);
}

#[test]
fn validate_suite() {
    let o = run(&["validate", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json(&o);
    let rows = rows.as_array().unwrap();
    assert!(rows.len() >= 12);
    assert!(rows.iter().all(|r| r["passed"] == true && r["name"].is_string()));
    let text = run(&["validate"]);
    assert_eq!(text.status.code(), Some(0));
    assert!(stdout(&text).lines().filter(|l| l.starts_with("PASS")).count() >= 12);
}
