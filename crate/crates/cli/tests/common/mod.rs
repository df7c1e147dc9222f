//! Helpers shared by the integration test targets.

#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wdbounds"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

#[rustfmt::skip]
pub const CASES: &[Case] = &[
    Case { name: "coeffs_c_3_5_csv", args: &["coeffs", "--seq", "c", "--from", "3", "--to", "5", "--format", "csv"], exit: 0 },
    Case { name: "coeffs_e_2_json", args: &["coeffs", "--seq", "e", "--from", "2", "--to", "2"], exit: 0 },
    Case { name: "coeffs_dpi_0_json", args: &["coeffs", "--seq", "dpi", "--from", "0", "--to", "0", "--format", "json", "--mode", "exact"], exit: 0 },
    Case { name: "coeffs_dpi_0_6_csv", args: &["coeffs", "--seq", "dpi", "--from", "0", "--to", "6", "--format", "csv"], exit: 0 },
    Case { name: "coeffs_d3_decimal_csv", args: &["coeffs", "--seq", "d3", "--from", "0", "--to", "6", "--mode", "decimal", "--digits", "8", "--format", "csv"], exit: 0 },
    Case { name: "bounds_sf_d3_3_json", args: &["bounds", "--target", "sf-d3", "--order", "3"], exit: 0 },
    Case { name: "bounds_sf_e_3_json", args: &["bounds", "--target", "sf-e", "--order", "3"], exit: 0 },
    Case { name: "bounds_sf_dpi_6_csv", args: &["bounds", "--target", "sf-dpi", "--order", "6", "--format", "csv"], exit: 0 },
    Case { name: "bounds_wilker_3_decimal_csv", args: &["bounds", "--target", "wilker", "--order", "3", "--mode", "decimal", "--digits", "10", "--format", "csv"], exit: 0 },
    Case { name: "bounds_wilker_6_csv", args: &["bounds", "--target", "wilker", "--order", "6", "--format", "csv"], exit: 0 },
    Case { name: "table_3_6_json", args: &["table", "--orders", "3..6", "--prec", "256"], exit: 0 },
    Case { name: "table_3_3_csv", args: &["table", "--orders", "3..3", "--format", "csv"], exit: 0 },
    Case { name: "table_3_6_exact_csv", args: &["table", "--orders", "3..6", "--mode", "exact", "--format", "csv"], exit: 0 },
    Case { name: "verify_wilker_3_json", args: &["verify", "--target", "wilker", "--order", "3"], exit: 0 },
    Case { name: "verify_sf_dpi_6_csv", args: &["verify", "--target", "sf-dpi", "--order", "6", "--format", "csv"], exit: 0 },
    Case { name: "verify_wilker_8_prec_32_csv", args: &["verify", "--target", "wilker", "--order", "8", "--prec", "32", "--format", "csv"], exit: 3 },
    Case { name: "error_table_2_3", args: &["table", "--orders", "2..3"], exit: 2 },
    Case { name: "error_verify_grid_0", args: &["verify", "--target", "wilker", "--order", "3", "--grid", "0"], exit: 2 },
    Case { name: "error_coeffs_range", args: &["coeffs", "--seq", "c", "--from", "7", "--to", "3"], exit: 2 },
    Case { name: "error_coeffs_too_far", args: &["coeffs", "--seq", "e", "--from", "0", "--to", "10001"], exit: 2 },
    Case { name: "error_bounds_order", args: &["bounds", "--target", "sf-e", "--order", "1"], exit: 2 },
    Case { name: "error_unknown_target", args: &["bounds", "--target", "tan", "--order", "3"], exit: 2 },
    Case { name: "error_missing_flag", args: &["coeffs", "--seq", "c", "--from", "1"], exit: 2 },
    Case { name: "error_low_prec", args: &["verify", "--target", "sf-e", "--order", "3", "--prec", "16"], exit: 2 },
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

fn read(name: &str, stream: &str) -> String {
    let path = golden_dir().join(format!("{name}.{stream}"));
    fs::read_to_string(&path).unwrap_or_default()
}

/// Runs every golden case and describes each mismatch.
pub fn golden_mismatches() -> Vec<String> {
    let mut mismatches = Vec::new();
    for case in CASES {
        let out = run(case.args);
        let stdout = String::from_utf8(out.stdout).unwrap();
        let stderr = String::from_utf8(out.stderr).unwrap();
        if out.status.code() != Some(case.exit) {
            mismatches.push(format!(
                "{}: exit {:?}, want {}",
                case.name,
                out.status.code(),
                case.exit
            ));
        }
        if stdout != read(case.name, "stdout") {
            mismatches.push(format!("{}: stdout differs:\n{stdout}", case.name));
        }
        if stderr != read(case.name, "stderr") {
            mismatches.push(format!("{}: stderr differs:\n{stderr}", case.name));
        }
    }
    mismatches
}
