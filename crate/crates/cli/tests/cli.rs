use std::io::Write;
use std::process::{Command, Output};

fn sextica(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sextica")).args(args).output().expect("run sextica")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn quartic_solve_exits_zero() {
    let out = sextica(&["solve", "--coeffs", "1,-10,35,-50,24"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["method_path"], "t1");
    let mut roots: Vec<f64> =
        v["candidates"].as_array().unwrap().iter().map(|c| c["re"].as_f64().unwrap()).collect();
    roots.sort_by(f64::total_cmp);
    for (got, want) in roots.iter().zip([1.0, 2.0, 3.0, 4.0]) {
        assert!((got - want).abs() <= 1e-9);
    }
    assert!(v["candidates"].as_array().unwrap().iter().all(|c| c["status"] == "verified"));
}

#[test]
fn report_field_order() {
    let out = sextica(&["solve", "--coeffs", "1,0,-1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let keys = [
        "\"input\"",
        "\"method_path\"",
        "\"branch_flags\"",
        "\"candidates\"",
        "\"intermediates\"",
        "\"oracle\"",
        "\"t3_crosscheck\"",
        "\"timing_ns\"",
    ];
    let positions: Vec<usize> =
        keys.iter().map(|k| text.find(k).unwrap_or_else(|| panic!("{k} missing"))).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{text}");
}

#[test]
fn forced_t2_with_zero_b_exits_two() {
    let out = sextica(&["solve", "--coeffs", "1,0,0,0,0,0,-1", "--method", "t2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["degeneracy"], "ZeroQuinticCoefficient");
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        vec!["solve", "--coeffs", "0,1,1"],
        vec!["solve", "--coeffs", "1,x,1"],
        vec!["solve", "--coeffs", "1,2"],
        vec!["solve", "--coeffs", "1,0,-1", "--method", "t1"],
        vec!["solve", "--coeffs", "1,0,-1", "--bogus"],
        vec!["solve", "--coeffs", "1,0,-1", "--tol", "-1"],
        vec!["solve"],
        vec!["sweep", "--degree", "5", "--count", "1", "--seed", "0"],
        vec!["sweep", "--degree", "4", "--count", "0", "--seed", "0"],
        vec!["sweep", "--degree", "4", "--count", "1", "--seed", "0", "--range", "3"],
        vec!["frobnicate"],
    ] {
        let out = sextica(&args);
        assert_eq!(out.status.code(), Some(64), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn spurious_sextic_exits_three() {
    let out = sextica(&["solve", "--coeffs", "1,-21,175,-735,1624,-1764,720"]);
    let v = json(&out);
    assert_eq!(v["method_path"], "t2");
    assert!(v["intermediates"]["V"].is_object());
    let verified = v["verified_count"].as_u64().unwrap();
    assert_eq!(out.status.code(), Some(if verified == 6 { 0 } else { 3 }));
}

#[test]
fn inapplicable_sextic_reports_oracle_roots() {
    let out = sextica(&["solve", "--coeffs", "1,0,0,1,0,0,-1"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["degeneracy"], "PipelineInapplicable");
    assert_eq!(v["oracle"]["roots"].as_array().unwrap().len(), 6);
}

#[test]
fn complex_coefficients_and_text_format() {
    let out = sextica(&["solve", "--coeffs", "1,0,1+2i", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("method: quadratic"));
    assert!(text.contains("verified: 2/2"));
}

#[test]
fn solve_output_is_deterministic() {
    let args = ["solve", "--coeffs", "2,-3,1,5,-7,1,0.5"];
    assert_eq!(sextica(&args).stdout, sextica(&args).stdout);
}

#[test]
fn timing_is_opt_in() {
    assert!(json(&sextica(&["solve", "--coeffs", "1,0,-1"]))["timing_ns"].is_null());
    assert!(json(&sextica(&["solve", "--coeffs", "1,0,-1", "--timing"]))["timing_ns"].is_u64());
}

#[test]
fn tol_changes_the_verdict() {
    let out = sextica(&["solve", "--coeffs", "1,-6,11,-6", "--tol", "1e-300"]);
    let v = json(&out);
    let statuses: Vec<&str> =
        v["candidates"].as_array().unwrap().iter().map(|c| c["status"].as_str().unwrap()).collect();
    let expected = if statuses.iter().all(|&s| s == "verified") { 0 } else { 3 };
    assert_eq!(out.status.code(), Some(expected));
}

#[test]
fn file_mode_writes_json_lines() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "1,-10,35,-50,24\n\n# comment\n1,0,0,0,0,-1\n0,1").unwrap();
    let out = sextica(&["solve", "--file", f.path().to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["verified_count"], 4);
    assert_eq!(lines[1]["method_path"], "oracle");
    assert_eq!(lines[2]["line"], 5);
    assert_eq!(out.status.code(), Some(64));

    let mut g = tempfile::NamedTempFile::new().unwrap();
    writeln!(g, "1,0,-1\n1,-6,11,-6").unwrap();
    assert_eq!(sextica(&["solve", "--file", g.path().to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn sweep_csv_has_one_row_per_instance() {
    let out = sextica(&["sweep", "--degree", "3", "--count", "5", "--seed", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.starts_with("index,"));
}

#[test]
fn sweep_count_one_is_repeatable() {
    let args = ["sweep", "--degree", "6", "--count", "1", "--seed", "99", "--all-seats", "--s56", "paper"];
    let a = sextica(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, sextica(&args).stdout);
    let v = json(&a);
    assert_eq!(v["s56_mode"], "paper");
    assert!(v["seats"].is_array());
}

#[test]
fn sweep_range_option() {
    let v = json(&sextica(&["sweep", "--degree", "4", "--count", "20", "--seed", "1", "--range", "-1,1"]));
    assert_eq!(v["range"], serde_json::json!([-1.0, 1.0]));
    assert_eq!(v["verified_histogram"][4], 20);
}
