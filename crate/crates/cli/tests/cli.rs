//! End-to-end tests of the `lur` binary: exit codes, output contracts,
//! schema conformance, and byte-level determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn lur() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lur"))
}

fn run(args: &[&str]) -> Output {
    lur().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "lur {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(name);
    let text = std::fs::read_to_string(&path).expect("schema file");
    let json: serde_json::Value = serde_json::from_str(&text).expect("schema is JSON");
    jsonschema::validator_for(&json).expect("schema compiles")
}

fn assert_valid(schema_name: &str, payload: &str) {
    let value: serde_json::Value = serde_json::from_str(payload).expect("output is JSON");
    let validator = schema(schema_name);
    let errors: Vec<String> = validator
        .iter_errors(&value)
        .map(|e| format!("{e}"))
        .collect();
    assert!(
        errors.is_empty(),
        "schema {schema_name} violations: {errors:#?}"
    );
}

// ── Exit codes ───────────────────────────────────────────────────────────────

#[test]
fn exit_zero_on_success() {
    assert_eq!(run(&["decompose", "--p", "0.37"]).status.code(), Some(0));
}

#[test]
fn exit_two_on_clap_usage_errors() {
    assert_eq!(
        run(&["bounds", "--kind", "nonsense"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["bounds"]).status.code(), Some(2)); // missing --kind
}

#[test]
fn exit_two_on_semantic_usage_errors() {
    assert_eq!(
        run(&["bounds", "--kind", "chsh", "--n", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["tomo", "--state", "werner:1.5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["tomo", "--state", "bell", "--reps", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["tomo", "--state", "bell", "--shots", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["decompose", "--p", "-0.2"]).status.code(), Some(2));
    assert_eq!(
        run(&["sweep", "--start", "0.5", "--stop", "0.1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["thresholds", "--format", "csv"]).status.code(),
        Some(2)
    );
}

#[test]
fn exit_one_on_computation_failures() {
    // A missing counts file is an IO-level failure, not a usage error.
    assert_eq!(
        run(&["tomo", "--counts-in", "/nonexistent/counts.csv"])
            .status
            .code(),
        Some(1)
    );
}

// ── Output contracts ─────────────────────────────────────────────────────────

#[test]
fn bounds_outputs_validate_against_schema() {
    for args in [
        vec!["bounds", "--kind", "chsh"],
        vec!["bounds", "--kind", "bell3322"],
        vec!["bounds", "--kind", "steering", "--n", "3"],
        vec!["bounds", "--kind", "steering", "--n", "2"],
        vec!["bounds", "--kind", "entanglement", "--n", "2"],
        vec!["bounds", "--kind", "chsh", "--quantum", "--seed", "3"],
    ] {
        assert_valid("bounds.schema.json", &stdout(&args));
    }
}

#[test]
fn bounds_chsh_reports_enumeration_facts() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["bounds", "--kind", "chsh"])).unwrap();
    assert_eq!(json["bound"], 2.0);
    assert_eq!(json["candidates"], 16);
    assert_eq!(json["method"], "enumeration");
}

#[test]
fn bounds_entanglement_n2_flags_discrepancy() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["bounds", "--kind", "entanglement", "--n", "2"])).unwrap();
    assert!((json["bound"].as_f64().unwrap() - 1.5).abs() < 1e-6);
    assert_eq!(json["paper_discrepancy"]["published"], 1.0);
}

#[test]
fn sweep_csv_header_and_shape() {
    let csv = stdout(&["sweep"]);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "p,kind,n,value,bound,violated,normalized,entropy"
    );
    // 6 families × 21 grid points.
    assert_eq!(lines.count(), 126);
}

#[test]
fn sweep_endpoint_rows() {
    let csv = stdout(&["sweep"]);
    // Steering n=3 curve ends at its algebraic maximum 3.
    let row = csv
        .lines()
        .find(|l| l.starts_with("1.0,steering,3,"))
        .expect("endpoint row present");
    let value: f64 = row.split(',').nth(3).unwrap().parse().unwrap();
    assert!((value - 3.0).abs() < 1e-9);
    // Nothing is violated at p = 0.
    for line in csv.lines().skip(1).filter(|l| l.starts_with("0.0,")) {
        assert_eq!(line.split(',').nth(5).unwrap(), "false", "row: {line}");
    }
}

#[test]
fn sweep_json_validates_against_schema() {
    assert_valid(
        "sweep.schema.json",
        &stdout(&["sweep", "--format", "json", "--step", "0.25"]),
    );
}

#[test]
fn thresholds_output_validates_and_contains_literature_rows() {
    let text = stdout(&["thresholds"]);
    assert_valid("thresholds.schema.json", &text);
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    let entries = json["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 8);

    let bell465 = entries
        .iter()
        .find(|e| e["settings"] == "465")
        .expect("465-settings row");
    assert_eq!(bell465["source"], "literature");
    assert_eq!(bell465["computed"], false);
    assert_eq!(bell465["threshold"], 0.7056);
    assert_eq!(bell465["inconclusive_region"], true);

    let ent3 = entries
        .iter()
        .find(|e| e["kind"] == "entanglement" && e["settings"] == "3")
        .unwrap();
    assert!((ent3["threshold"].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-6);
    let steer3 = entries
        .iter()
        .find(|e| e["kind"] == "steering" && e["settings"] == "3")
        .unwrap();
    assert!((steer3["threshold"].as_f64().unwrap() - 0.577350).abs() < 1e-6);
}

#[test]
fn tomo_output_validates_against_schema() {
    let text = stdout(&[
        "tomo", "--state", "bell", "--shots", "500", "--reps", "3", "--seed", "7",
    ]);
    assert_valid("tomography.schema.json", &text);
}

#[test]
fn tomo_poisson_mode_reports_and_validates() {
    let text = stdout(&[
        "tomo",
        "--state",
        "bell",
        "--poisson",
        "--shots",
        "2000",
        "--reps",
        "3",
        "--seed",
        "4",
    ]);
    assert_valid("tomography.schema.json", &text);
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["mode"], "poisson");
    assert!(json["fidelity_to_target"].as_f64().unwrap() > 0.9);
}

#[test]
fn tomo_analytic_mode_is_exact() {
    let text = stdout(&[
        "tomo",
        "--state",
        "werner:1.0",
        "--target",
        "singlet",
        "--analytic",
        "--reps",
        "2",
    ]);
    assert_valid("tomography.schema.json", &text);
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!((json["fidelity_to_target"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(json["fidelity_std"].as_f64().unwrap(), 0.0);
}

#[test]
fn decompose_output_validates_against_schema() {
    for p in ["0.6", "0.37", "1.0"] {
        assert_valid("decompose.schema.json", &stdout(&["decompose", "--p", p]));
    }
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["decompose", "--p", "0.6"])).unwrap();
    assert_eq!(json["integer_row"]["alpha"], 14);
    assert_eq!(json["integer_row"]["beta"], 2);
    assert!(json["max_deviation"].as_f64().unwrap() < 1e-12);
    // Off-table p has weights but no integer row.
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["decompose", "--p", "0.37"])).unwrap();
    assert!(json["integer_row"].is_null());
}

// ── Counts export / import round trip ────────────────────────────────────────

#[test]
fn counts_round_trip_through_csv() {
    let dir = tempfile::tempdir().unwrap();
    let counts_path = dir.path().join("counts.csv");
    let direct = stdout(&[
        "tomo",
        "--state",
        "werner:0.8",
        "--shots",
        "2000",
        "--reps",
        "2",
        "--seed",
        "11",
        "--export-counts",
        counts_path.to_str().unwrap(),
    ]);
    assert_valid("tomography.schema.json", &direct);

    let csv = std::fs::read_to_string(&counts_path).unwrap();
    assert!(csv.starts_with("setting_i,setting_j,a,b,count"));
    assert_eq!(csv.lines().count(), 37); // header + 36 rows

    let imported = stdout(&["tomo", "--counts-in", counts_path.to_str().unwrap()]);
    assert_valid("tomography.schema.json", &imported);
    let json: serde_json::Value = serde_json::from_str(&imported).unwrap();
    assert_eq!(json["mode"], "multinomial");
    assert_eq!(json["shots_per_setting"], 2000.0);
    assert_eq!(json["repetitions"], 1);
    // Fidelity of a p=0.8 noisy singlet against psi-plus is low but defined.
    assert!(json["fidelity_to_target"].as_f64().unwrap() < 0.5);
}

// ── Determinism and output resolution ────────────────────────────────────────

#[test]
fn seeded_commands_are_byte_identical() {
    for args in [
        vec!["sweep"],
        vec!["thresholds"],
        vec![
            "tomo", "--state", "bell", "--shots", "1000", "--reps", "5", "--seed", "42",
        ],
        vec!["bounds", "--kind", "chsh", "--quantum", "--seed", "9"],
        vec!["decompose", "--p", "0.2"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success());
        assert_eq!(
            first.stdout, second.stdout,
            "non-deterministic output for {args:?}"
        );
    }
}

#[test]
fn output_dir_env_var_resolves_relative_paths() {
    let dir = tempfile::tempdir().unwrap();
    let out = lur()
        .args(["decompose", "--p", "0.4", "--output", "report.json"])
        .env("LUR_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let written = dir.path().join("report.json");
    assert!(written.exists(), "file not created at {written:?}");
    assert_valid(
        "decompose.schema.json",
        &std::fs::read_to_string(written).unwrap(),
    );
    // An absolute --output ignores the env var.
    let abs: PathBuf = dir.path().join("abs.json");
    let out = lur()
        .args(["decompose", "--p", "0.4", "--output", abs.to_str().unwrap()])
        .env("LUR_OUTPUT_DIR", "/definitely/not/here")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(abs.exists());
}

#[test]
fn output_files_identical_across_reruns() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for (path, _) in [(&a, 0), (&b, 1)] {
        let out = lur()
            .args(["sweep", "--output", path.to_str().unwrap()])
            .output()
            .unwrap();
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}
