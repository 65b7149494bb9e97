use std::process::{Command, Output};

fn starlike(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starlike"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(o: &Output) -> Vec<Vec<String>> {
    stdout(o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn lambda_unit_parameters() {
    let o = starlike(&["lambda", "--alpha1", "1", "--alpha2", "1", "--n-max", "4"]);
    assert!(o.status.success());
    let rows = csv_rows(&o);
    assert_eq!(rows.len(), 4);
    for row in rows {
        assert!((num(&row[1]) - 2.0).abs() < 1e-10);
        assert!(num(&row[4]) < 1e-10);
    }
}

#[test]
fn lambda_one_at_half() {
    let o = starlike(&["lambda", "--alpha1", "0.5", "--alpha2", "0.5", "--n-max", "1", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"][0]["re"], 1.0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
}

#[test]
fn invalid_parameters_are_usage_errors() {
    assert_eq!(starlike(&["lambda", "--alpha1", "0"]).status.code(), Some(2));
    assert_eq!(starlike(&["bounds", "gamma", "--alpha2", "1.5"]).status.code(), Some(2));
    assert_eq!(starlike(&["lambda", "--n-max", "0"]).status.code(), Some(2));
    assert_eq!(starlike(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn real_part_bound_near_one_third() {
    let o = starlike(&["bounds", "re", "--alpha1", "1", "--alpha2", "1", "--r", "0.3333333"]);
    assert!(o.status.success());
    let rows = csv_rows(&o);
    assert!((num(&rows[0][2]) - 2.0).abs() < 1e-5);
}

#[test]
fn out_of_range_radius_is_a_null_row() {
    let o = starlike(&["bounds", "re", "--alpha1", "0.5", "--alpha2", "0.5", "--r-list", "0.2,0.5", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["entries"][0]["value"].is_number());
    assert!(v["entries"][1]["value"].is_null());
    assert!(v["entries"][1]["value_upper"].is_number());
    assert!(String::from_utf8_lossy(&o.stderr).contains("outside the domain"));
}

#[test]
fn growth_and_coefficient_tables() {
    let o = starlike(&["bounds", "growth", "--alpha1", "1", "--alpha2", "1", "--r", "0.5"]);
    let row = &csv_rows(&o)[0];
    assert!((num(&row[1]) - 2.0 / 9.0).abs() < 1e-11);
    assert!((num(&row[2]) - 2.0).abs() < 1e-11);

    let o = starlike(&["bounds", "coeff", "--alpha1", "1", "--alpha2", "1", "--n-max", "6"]);
    let values: Vec<String> = csv_rows(&o).into_iter().map(|r| r[1].clone()).collect();
    assert_eq!(values, ["2", "3", "4", "5", "6"]);
}

#[test]
fn check_exit_codes() {
    let o = starlike(&["check", "--builtin", "koebe", "--alpha1", "1", "--alpha2", "1"]);
    assert_eq!(o.status.code(), Some(0));

    let o = starlike(&["check", "--builtin", "identity", "--alpha1", "0.2", "--alpha2", "0.3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["min_arg"], 0.0);
    assert_eq!(v["max_arg"], 0.0);
    assert_eq!(v["status"], "no-violation-on-grid");

    let o = starlike(&["check", "--builtin", "koebe-beta:1.0", "--alpha1", "0.5", "--alpha2", "0.5"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "violated");
    assert!(!v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn check_series_files() {
    let dir = std::env::temp_dir().join(format!("starlike-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("koebe.json");
    let coeffs: Vec<[f64; 2]> = (0..40).map(|n| [n as f64, 0.0]).collect();
    std::fs::write(&good, serde_json::to_string(&coeffs).unwrap()).unwrap();
    let o = starlike(&["check", "--series", good.to_str().unwrap(), "--r-list", "0.1,0.3,0.5"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let choice = format!("series:{}", good.display());
    assert_eq!(starlike(&["check", "--builtin", &choice, "--r-list", "0.1,0.3"]).status.code(), Some(0));

    let bad = dir.join("bad.json");
    std::fs::write(&bad, "[[0, 0], [1]]").unwrap();
    assert_eq!(starlike(&["check", "--series", bad.to_str().unwrap()]).status.code(), Some(2));
    let missing = dir.join("missing.json");
    assert_eq!(starlike(&["check", "--series", missing.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn convexity_condition_grid_is_clamped() {
    let o = starlike(&["check", "--builtin", "identity", "--condition", "convexity"]);
    assert_eq!(o.status.code(), Some(0));
    let o = starlike(&["check", "--builtin", "identity", "--condition", "convexity", "--r", "0.34"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn extremal_rows() {
    let o = starlike(&["extremal", "--alpha1", "1", "--alpha2", "1", "--order", "8"]);
    let rows = csv_rows(&o);
    assert_eq!(rows.len(), 8);
    for (i, row) in rows.iter().enumerate() {
        let n = (i + 1) as f64;
        assert!((num(&row[3]) - n).abs() < 1e-9);
        assert!((num(&row[6]) - 1.0 / n).abs() < 1e-11);
        assert!((num(&row[7]) - 1.0 / n).abs() < 1e-11);
    }

    let o = starlike(&["extremal", "--alpha1", "0.3", "--alpha2", "0.8", "--order", "5"]);
    let rows = csv_rows(&o);
    assert_eq!(rows[0][6], rows[0][7]);

    let o = starlike(&["extremal", "--order", "1"]);
    let rows = csv_rows(&o);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][1], "1");
}

#[test]
fn plot_data() {
    let o = starlike(&["plotdata", "omega-boundary", "--angles", "5"]);
    let rows = csv_rows(&o);
    assert_eq!(rows.len(), 10);
    for row in &rows {
        assert!(num(&row[2]).abs() < 1e-12);
    }

    let o = starlike(&["plotdata", "g-image", "--r", "0.5", "--angles", "720"]);
    let re: Vec<f64> = csv_rows(&o).iter().map(|r| num(&r[2])).collect();
    let min = re.iter().copied().fold(f64::INFINITY, f64::min);
    let max = re.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    assert!((min - 1.0 / 3.0).abs() < 1e-9);
    assert!((max - 3.0).abs() < 1e-9);

    let o = starlike(&["plotdata", "growth-annulus", "--r", "0.5", "--angles", "4"]);
    let radii: Vec<f64> = csv_rows(&o).iter().map(|r| num(&r[2])).collect();
    assert!(radii[..4].iter().all(|&x| (x - 2.0 / 9.0).abs() < 1e-11));
    assert!(radii[4..].iter().all(|&x| (x - 2.0).abs() < 1e-11));
}

#[test]
fn verify_suites() {
    let o = starlike(&["verify", "generator"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(stdout(&o).contains("lambda_dual_formula") || v["suites"][0]["cases_run"].as_u64().unwrap() >= 100);
    assert_eq!(starlike(&["verify", "nope"]).status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_and_can_go_to_a_file() {
    let args = ["lambda", "--alpha1", "0.37", "--alpha2", "0.81", "--n-max", "40"];
    assert_eq!(starlike(&args).stdout, starlike(&args).stdout);
    let path = std::env::temp_dir().join(format!("starlike-out-{}.csv", std::process::id()));
    let mut with_out = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    with_out.extend(["--out", &p]);
    let o = starlike(&with_out);
    assert!(o.status.success() && o.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), starlike(&args).stdout);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(starlike(&["lambda", "--out", "/nonexistent-dir/x.csv"]).status.code(), Some(2));
}
