use std::process::{Command, Output};

use serde_json::Value;

fn zeta4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zeta4"))
        .args(args)
        .output()
        .expect("spawn zeta4")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// CSV rows as string fields (none of the compared outputs need quoting).
fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(str::to_owned).collect();
    let rows = lines.map(|l| l.split(',').map(str::to_owned).collect()).collect();
    (header, rows)
}

fn json_as_csv_fields(text: &str, header: &[String]) -> Vec<Vec<String>> {
    let v: Value = serde_json::from_str(text).unwrap();
    v.as_array()
        .unwrap()
        .iter()
        .map(|obj| {
            header
                .iter()
                .map(|k| match &obj[k] {
                    Value::Null => String::new(),
                    Value::String(s) => s.clone(),
                    Value::Number(n) => n.to_string(),
                    other => panic!("unexpected JSON value {other}"),
                })
                .collect()
        })
        .collect()
}

fn assert_formats_agree(args: &[&str]) {
    let csv = zeta4(&[args, &["--format", "csv"]].concat());
    let json = zeta4(&[args, &["--format", "json"]].concat());
    assert_eq!(csv.status.code(), json.status.code());
    let (header, rows) = csv_rows(&stdout(&csv));
    assert_eq!(json_as_csv_fields(&stdout(&json), &header), rows, "{args:?}");
}

#[test]
fn gen_initial_rows_csv() {
    let out = zeta4(&["gen", "--max-n", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n,u,v\n0,1,0/1\n1,12,13/1\n");
}

#[test]
fn gen_row_two() {
    let out = zeta4(&["gen", "--max-n", "2"]);
    assert_eq!(stdout(&out).lines().nth(3), Some("2,804,13923/16"));
}

#[test]
fn gen_json_single_row() {
    let out = zeta4(&["gen", "--max-n", "0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v, serde_json::json!([{"n": 0, "u": "1", "v": "0/1"}]));
}

#[test]
fn formats_carry_identical_content() {
    assert_formats_agree(&["gen", "--max-n", "12"]);
    assert_formats_agree(&["residuals", "--max-n", "6"]);
    assert_formats_agree(&["verify", "specialization", "--max-n", "2"]);
    assert_formats_agree(&["verify", "epsilon-limit", "--max-n", "5"]);
}

#[test]
fn variants_report_one_line_per_case() {
    let out = zeta4(&["verify", "variants", "--max-n", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let (header, rows) = csv_rows(&stdout(&out));
    assert_eq!(header, ["check", "n", "case", "result", "detail"]);
    assert_eq!(rows.len(), 66);
    assert!(rows.iter().all(|r| r[0] == "variants" && r[3] == "pass"));

    let out = zeta4(&["verify", "variants", "--max-n", "4", "--variants", "V5,F"]);
    let (_, rows) = csv_rows(&stdout(&out));
    let cases: Vec<&str> = rows.iter().map(|r| r[2].as_str()).collect();
    assert_eq!(cases.len(), 10);
    assert_eq!(cases[..2], ["F", "V5"]);
}

#[test]
fn identity5_passes() {
    let out = zeta4(&["verify", "identity5", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(csv_rows(&stdout(&out)).1.len(), 9);
}

#[test]
fn epsilon_limit_reports_antisymmetry_too() {
    let out = zeta4(&["verify", "epsilon-limit", "--max-n", "6", "--jet-order", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let (_, rows) = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 14);
    assert_eq!(rows.iter().filter(|r| r[0] == "antisymmetry").count(), 7);
    assert!(rows.iter().filter(|r| r[0] == "epsilon-limit").all(|r| r[2] == "K=4"));
}

#[test]
fn andrews_trivial_case() {
    let out = zeta4(&["verify", "andrews", "--s", "1", "--trials", "1", "--seed", "7", "--m-max", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let (_, rows) = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][3], "pass");
    assert_eq!(rows[0][2], "s=1 m=0");
}

#[test]
fn specialization_at_zero() {
    let out = zeta4(&["verify", "specialization", "--max-n", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let (_, rows) = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r[3] == "pass"));
    assert_eq!(rows[5][2..], ["c1c3", "pass", "variant F"]);
}

#[test]
fn residual_signs_and_first_bracket() {
    let out = zeta4(&["residuals", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let (_, rows) = csv_rows(&stdout(&out));
    let signs: Vec<&str> = rows.iter().map(|r| r[1].as_str()).collect();
    assert_eq!(signs, ["+", "-", "+"]);
    let lo: f64 = rows[1][2].parse().unwrap();
    let hi: f64 = rows[1][3].parse().unwrap();
    // 0.0121212 to six significant digits.
    assert_eq!(format!("{lo:.6e}"), "1.212120e-2");
    assert_eq!(format!("{hi:.6e}"), "1.212120e-2");
    assert!(lo < hi && hi - lo < 1e-15);
}

#[test]
fn residual_json_is_well_formed() {
    let out = zeta4(&["residuals", "--max-n", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows[1]["residual_lower"].as_str().unwrap().contains('/'));
    assert!(rows[0]["ratio_lower"].is_null());
}

#[test]
fn output_is_deterministic_across_runs_and_threads() {
    let args = ["verify", "andrews", "--s", "2", "--trials", "12", "--seed", "99"];
    let one = zeta4(&[&args[..], &["--threads", "1"]].concat());
    let many = zeta4(&[&args[..], &["--threads", "4"]].concat());
    let again = zeta4(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(many.stdout, again.stdout);

    let other_seed = zeta4(&["verify", "andrews", "--s", "2", "--trials", "12", "--seed", "100"]);
    assert_ne!(one.stdout, other_seed.stdout);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["frobnicate"][..],
        &["verify"],
        &["verify", "andrews", "--s", "0"],
        &["gen", "--max-n", "-1"],
        &["gen", "--format", "yaml"],
        &["residuals", "--enclosure-width", "0"],
        &["verify", "variants", "--threads", "0"],
    ] {
        let out = zeta4(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(zeta4(&["--help"]).status.code(), Some(0));
    assert_eq!(zeta4(&["--version"]).status.code(), Some(0));
}

#[test]
fn loose_enclosure_is_degenerate_input() {
    let out = zeta4(&["residuals", "--max-n", "5", "--enclosure-width", "1/1000"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("enclosure too loose"));
}
