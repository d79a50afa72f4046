//! Black-box tests of the command-line interface: exit codes, report
//! schemas, worked examples, the constants override, and output routing.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_conjugate-bench"));
    c.env_remove("CONJUGATE_BENCH_CONSTANTS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is valid json")
}

fn tmp_path(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

// ---------------------------------------------------------------------------
// exit codes
// ---------------------------------------------------------------------------

#[test]
fn no_arguments_is_a_usage_error() {
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8_lossy(&out.stderr);
    assert!(text.contains("Usage"), "stderr should show usage: {text}");
    for name in ["widths", "uncertainty", "corpus-audit", "sample", "alias", "reconstruct", "brillouin", "hydrogen"] {
        assert!(text.contains(name), "usage text should list `{name}`");
    }
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = run(&["alias", "--f", "1", "--rate", "2", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_enum_value_is_named_in_the_diagnostic() {
    let out = run(&["uncertainty", "--family", "gaussian", "--convention", "banana"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("banana"));
}

#[test]
fn malformed_family_spec_is_a_usage_error() {
    let out = run(&["widths", "--family", "gaussian:sigma"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn physical_bound_requires_a_physical_domain() {
    let out = run(&["uncertainty", "--family", "gaussian", "--bound", "hbar-over-2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--domain"));
}

#[test]
fn unparseable_bound_is_a_usage_error() {
    let out = run(&["uncertainty", "--family", "gaussian", "--bound", "banana"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("banana"));
}

#[test]
fn format_mismatches_are_usage_errors() {
    let json_only = run(&["widths", "--family", "gaussian", "--output", "csv"]);
    assert_eq!(json_only.status.code(), Some(2));
    let csv_only = run(&["sample", "--family", "gaussian", "--factor", "2", "--output", "json"]);
    assert_eq!(csv_only.status.code(), Some(2));
}

#[test]
fn help_and_version_exit_zero() {
    let help = run(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&help.stdout).contains("uncertainty"));
    let version = run(&["--version"]);
    assert_eq!(version.status.code(), Some(0));
}

#[test]
fn computation_errors_exit_one_with_structured_json() {
    let out = run(&["widths", "--family", "plane_wave:wavenumber=1"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).expect("stderr is json");
    assert_eq!(err["schema"], "conjugate-bench/1");
    assert_eq!(err["error"]["kind"], "invalid_parameter");
    assert!(err["error"]["message"].as_str().unwrap().contains("plane_wave"));

    let out = run(&["hydrogen", "--n", "1", "--m", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).expect("stderr is json");
    assert_eq!(err["error"]["kind"], "invalid_parameter");
}

// ---------------------------------------------------------------------------
// report schemas and worked examples
// ---------------------------------------------------------------------------

#[test]
fn every_json_report_carries_the_schema_tag() {
    let commands: &[&[&str]] = &[
        &["widths", "--family", "gaussian"],
        &["uncertainty", "--family", "gaussian"],
        &["corpus-audit"],
        &["alias", "--f", "130", "--rate", "100"],
        &["brillouin", "--a", "2e-10", "--k", "8e10"],
        &["hydrogen", "--n", "2", "--m", "1"],
    ];
    for args in commands {
        let v = stdout_json(args);
        assert_eq!(v["schema"], "conjugate-bench/1", "schema missing for {args:?}");
    }
}

#[test]
fn gaussian_uncertainty_reports_one_half() {
    let v = stdout_json(&["uncertainty", "--family", "gaussian:sigma=1", "--convention", "omega"]);
    let product = v["product"].as_f64().unwrap();
    assert!((product - 0.5).abs() <= 1e-4, "product = {product}");
    assert_eq!(v["satisfied"], Value::Bool(true));
    assert_eq!(v["convention"], "omega");
    assert!(v["signal_widths"]["effective_width"].is_number());
    assert!(v["transform_widths"]["effective_width"].is_number());
}

#[test]
fn custom_bound_is_honored() {
    let v = stdout_json(&["uncertainty", "--family", "gaussian", "--bound", "0.75"]);
    assert_eq!(v["bound_constant"].as_f64().unwrap(), 0.75);
    assert_eq!(v["satisfied"], Value::Bool(false));
}

#[test]
fn physical_bound_reports_both_candidates() {
    let v = stdout_json(&[
        "uncertainty",
        "--family",
        "gaussian",
        "--bound",
        "h-over-2",
        "--domain",
        "position",
    ]);
    assert_eq!(v["kind"], "position_momentum");
    assert_eq!(v["bound_choice"], "h_over_2");
    assert_eq!(v["satisfied"], Value::Bool(false));
    let h2 = v["h_over_2"].as_f64().unwrap();
    let hbar2 = v["hbar_over_2"].as_f64().unwrap();
    let product = v["product"].as_f64().unwrap();
    assert!(product < h2 && product >= hbar2 * (1.0 - 1e-6));
}

#[test]
fn brillouin_example_reduces_into_the_zone() {
    let v = stdout_json(&["brillouin", "--a", "2e-10", "--k", "8e10"]);
    let boundary = v["boundary"].as_f64().unwrap();
    let reduced = v["reduced_k"].as_f64().unwrap();
    let expected_boundary = std::f64::consts::PI / 2e-10;
    assert!((boundary - expected_boundary).abs() <= 1e-6 * expected_boundary);
    assert_eq!(v["zone_index"].as_i64().unwrap(), 3);
    let expected = 8e10 - 3.0 * 2.0 * expected_boundary;
    assert!((reduced - expected).abs() <= 1e-9 * expected.abs());
    assert!(reduced > -boundary && reduced <= boundary);
}

#[test]
fn hydrogen_example_is_observable_with_wide_margin() {
    let v = stdout_json(&["hydrogen", "--n", "2", "--m", "1", "--Z", "1"]);
    assert_eq!(v["observable"], Value::Bool(true));
    assert!(v["margin"].as_f64().unwrap() > 1e6);
    let joules = v["transition_energy_E_mn"].as_f64().unwrap();
    let ev = v["transition_energy_eV"].as_f64().unwrap();
    assert!((ev - 10.2).abs() < 0.05, "E_21 = {ev} eV");
    assert!((joules / ev - 1.602176634e-19).abs() < 1e-27);
}

#[test]
fn alias_examples_fold_as_published() {
    let folded = stdout_json(&["alias", "--f", "130", "--rate", "100"]);
    assert_eq!(folded["apparent_frequency"].as_f64().unwrap(), 30.0);
    assert_eq!(folded["aliased"], Value::Bool(true));

    let in_band = stdout_json(&["alias", "--f", "30", "--rate", "100"]);
    assert_eq!(in_band["apparent_frequency"].as_f64().unwrap(), 30.0);
    assert_eq!(in_band["aliased"], Value::Bool(false));
}

#[test]
fn corpus_audit_covers_the_default_corpus() {
    let v = stdout_json(&["corpus-audit"]);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 5);
    let family_of = |e: &Value| e["family"].as_str().unwrap().to_string();
    assert!(entries.iter().any(|e| family_of(e).starts_with("gaussian")));
    let rectangle = entries
        .iter()
        .find(|e| family_of(e).starts_with("rectangle"))
        .unwrap();
    assert_eq!(rectangle["width_reliable"], Value::Bool(false));
    assert!(v["minimum_reliable"]["family"].as_str().unwrap().starts_with("gaussian"));
    let min_product = v["minimum_reliable"]["product"].as_f64().unwrap();
    assert!((min_product - 0.5).abs() <= 1e-3);
}

#[test]
fn restricted_corpus_runs_only_the_requested_families() {
    let v = stdout_json(&[
        "corpus-audit",
        "--family",
        "gaussian:sigma=2",
        "--family",
        "two_sided_exponential:decay=1",
    ]);
    assert_eq!(v["entries"].as_array().unwrap().len(), 2);
}

// ---------------------------------------------------------------------------
// output routing
// ---------------------------------------------------------------------------

#[test]
fn output_path_replaces_stdout() {
    let path = tmp_path("alias_report.json");
    let _ = fs::remove_file(&path);
    let piped = run(&["alias", "--f", "130", "--rate", "100"]);
    let to_file = bin()
        .args(["alias", "--f", "130", "--rate", "100", "--output-path"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty());
    assert_eq!(fs::read(&path).unwrap(), piped.stdout);
    let _ = fs::remove_file(&path);
}

#[test]
fn sample_and_reconstruct_emit_csv() {
    let args = ["--family", "gaussian:sigma=1", "--span", "20", "--count", "257", "--factor", "4"];
    let sampled = run(&[&["sample"], &args[..]].concat());
    assert!(sampled.status.success());
    let text = String::from_utf8(sampled.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("index,coordinate,re,im"));
    assert_eq!(lines.count(), 65);

    let rebuilt = run(&[&["reconstruct"], &args[..]].concat());
    assert!(rebuilt.status.success());
    let text = String::from_utf8(rebuilt.stdout).unwrap();
    assert_eq!(text.lines().count(), 258);
    assert!(text.starts_with("index,coordinate,re,im\n"));
}

// ---------------------------------------------------------------------------
// constants override
// ---------------------------------------------------------------------------

const CODATA_JSON: &str = r#"{
  "planck_h": 6.62607015e-34,
  "fine_structure_alpha": 7.2973525693e-3,
  "light_speed_c": 299792458.0,
  "rydberg_R_H": 10973731.568160
}"#;

#[test]
fn constants_file_matching_the_defaults_changes_nothing() {
    let path = tmp_path("codata.json");
    fs::write(&path, CODATA_JSON).unwrap();
    let default = run(&["hydrogen", "--n", "3", "--m", "2"]);
    let overridden = bin()
        .args(["hydrogen", "--n", "3", "--m", "2"])
        .env("CONJUGATE_BENCH_CONSTANTS", &path)
        .output()
        .unwrap();
    assert!(overridden.status.success());
    assert_eq!(default.stdout, overridden.stdout);
    let _ = fs::remove_file(&path);
}

#[test]
fn doubled_planck_constant_doubles_transition_energies() {
    let path = tmp_path("doubled_h.json");
    fs::write(&path, CODATA_JSON.replace("6.62607015e-34", "1.325214030e-33")).unwrap();
    let baseline = stdout_json(&["hydrogen", "--n", "2", "--m", "1"]);
    let out = bin()
        .args(["hydrogen", "--n", "2", "--m", "1"])
        .env("CONJUGATE_BENCH_CONSTANTS", &path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let doubled: Value = serde_json::from_slice(&out.stdout).unwrap();
    let ratio = doubled["transition_energy_E_mn"].as_f64().unwrap()
        / baseline["transition_energy_E_mn"].as_f64().unwrap();
    assert!((ratio - 2.0).abs() <= 1e-12);
    // the resolution floor doubles too, so the margin is unchanged
    let margin_ratio =
        doubled["margin"].as_f64().unwrap() / baseline["margin"].as_f64().unwrap();
    assert!((margin_ratio - 1.0).abs() <= 1e-12);
    let _ = fs::remove_file(&path);
}

#[test]
fn malformed_constants_file_fails_with_invalid_config() {
    let path = tmp_path("broken_constants.json");
    fs::write(&path, "{ not json").unwrap();
    let out = bin()
        .args(["hydrogen", "--n", "2", "--m", "1"])
        .env("CONJUGATE_BENCH_CONSTANTS", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "invalid_config");
    let _ = fs::remove_file(&path);
}

#[test]
fn missing_constants_file_fails_with_io_error() {
    let out = bin()
        .args(["hydrogen", "--n", "2", "--m", "1"])
        .env("CONJUGATE_BENCH_CONSTANTS", "/nonexistent/constants.json")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "io");
}
