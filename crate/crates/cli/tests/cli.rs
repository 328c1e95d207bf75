//! End-to-end tests of the binary: formats, exit codes, file output and
//! the fault-injection path of the verifier.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_higgs-ih"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn compute_text_g2() {
    let out = run(&[
        "compute",
        "--genus",
        "2",
        "--quantity",
        "ip_m",
        "--format",
        "text",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 + t^2 + 17 t^4 + 17 t^6");
}

#[test]
fn compute_json_ip_upsilon_g3() {
    let out = run(&[
        "compute",
        "--genus",
        "3",
        "--quantity",
        "ip_upsilon",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["genus"], 3);
    assert_eq!(doc["quantity"], "ip_upsilon");
    assert_eq!(doc["route"], "closed_form");
    assert_eq!(doc["degree"], 8);
    let coeffs: Vec<String> = doc["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_owned())
        .collect();
    assert_eq!(coeffs, ["1", "0", "0", "0", "1", "0", "0", "0", "1"]);
}

#[test]
fn json_and_csv_carry_identical_data() {
    for quantity in [
        "ip_m",
        "correction_theorem2",
        "p_sl2_r2s",
        "incidence_split",
    ] {
        let json_out = run(&[
            "compute",
            "--genus",
            "4",
            "--quantity",
            quantity,
            "--format",
            "json",
        ]);
        let csv_out = run(&[
            "compute",
            "--genus",
            "4",
            "--quantity",
            quantity,
            "--format",
            "csv",
        ]);
        assert!(json_out.status.success() && csv_out.status.success());

        let doc: serde_json::Value = serde_json::from_str(stdout(&json_out).trim()).unwrap();
        let json_coeffs: Vec<String> = doc["coefficients"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().to_owned())
            .collect();

        let csv = stdout(&csv_out);
        let mut lines = csv.lines();
        let header = lines.next().unwrap();
        assert!(header.starts_with("genus,degree,c0"));
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row[0], "4");
        assert_eq!(row[1], doc["degree"].to_string());
        assert_eq!(&row[2..], json_coeffs.as_slice(), "quantity {quantity}");
    }
}

#[test]
fn json_round_trips_through_file_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    // --output without --format defaults to json
    let out = bin()
        .args(["compute", "--genus", "5", "--quantity", "ip_m", "--output"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let coeffs: Vec<i64> = doc["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(
        coeffs,
        vec![
            1, 0, 1, 10, 2, 10, 47, 20, 48, 140, 93, 150, 304, 270, 349, 522, 1583, 532, 29414,
            532, 72170, 280, 28784, 30, 1028
        ]
    );
}

#[test]
fn table_csv_padded_to_common_width() {
    let out = run(&["table", "--genus-range", "2..5", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 5, "header plus four rows");
    assert!(lines[0].ends_with(",c24"));
    let g4: Vec<&str> = lines[3].split(',').collect();
    assert_eq!(g4[0], "4");
    assert_eq!(g4[1], "18");
    // coefficients at degrees 17 and 18 per the reference list
    assert_eq!(g4[2 + 17], "16");
    assert_eq!(g4[2 + 18], "259");
    // padded with zeros to the g=5 width
    assert!(g4[2 + 19..].iter().all(|c| *c == "0"));
    assert_eq!(g4.len(), 2 + 25);
}

#[test]
fn table_latex_single_display() {
    let out = run(&["table", "--genus-range", "2..2", "--format", "latex"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1+t^{2}+17t^{4}+17t^{6}"));
}

#[test]
fn verify_small_range_passes() {
    let out = run(&["verify", "--genus-range", "2..5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_fault_injection_fails_with_diagnostic() {
    let out = run(&["verify", "--genus-range", "2..2", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL"));
    // first divergent coefficient index and both values
    assert!(text.contains("first divergence at t^2"), "got: {text}");
    assert!(text.contains("got 2, expected 1"), "got: {text}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        run(&["compute", "--genus", "1", "--quantity", "ip_m"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["compute", "--genus", "2", "--quantity", "nope"])
            .status
            .code(),
        Some(2)
    );
    // d1 is undefined at genus 2
    assert_eq!(
        run(&["compute", "--genus", "2", "--quantity", "d1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["table", "--genus-range", "5..2"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["table", "--genus-range", ""]).status.code(), Some(2));
    assert_eq!(
        run(&["table", "--genus-range", "1..4"]).status.code(),
        Some(2)
    );
    // clap's own usage failures also exit 2
    assert_eq!(run(&["compute", "--genus", "2"]).status.code(), Some(2));
}

#[test]
fn verify_json_format() {
    let out = run(&["verify", "--genus-range", "2..2", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let items = doc.as_array().unwrap();
    assert!(items.len() >= 12);
    assert!(items.iter().all(|c| c["passed"].as_bool().unwrap()));
    assert!(items.iter().any(|c| c["check"] == "table_match"));
}

#[test]
fn series_quantities_respect_truncation_override() {
    let out = run(&[
        "compute",
        "--genus",
        "2",
        "--quantity",
        "p_sl2_r",
        "--format",
        "json",
        "--truncation-order",
        "10",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let coeffs: Vec<String> = doc["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_owned())
        .collect();
    assert_eq!(
        coeffs,
        ["1", "0", "1", "4", "2", "4", "23", "4", "2", "4", "6"]
    );
}

#[test]
fn split_quantities_report_totals() {
    let out = run(&[
        "compute",
        "--genus",
        "3",
        "--quantity",
        "incidence_split",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    // total = P_t(P^3) P_t(P^2) = 1+2t^2+3t^4+3t^6+2t^8+t^10
    let coeffs: Vec<String> = doc["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_owned())
        .collect();
    assert_eq!(
        coeffs,
        ["1", "0", "2", "0", "3", "0", "3", "0", "2", "0", "1"]
    );
    assert!(doc["checks_passed"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c == "sum_identity"));
}

#[test]
fn output_written_only_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let out = bin()
        .args([
            "table",
            "--genus-range",
            "2..3",
            "--format",
            "csv",
            "--output",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    assert!(Path::new(&path).exists());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("genus,degree,"));
}
