use std::path::PathBuf;
use std::process::Command;

use qosc_cli::{run_command, CliError, Report, Status, SCHEMA_VERSION};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn report(args: &[&str]) -> Report {
    let argv = std::iter::once("qosc").chain(args.iter().copied());
    run_command(argv).expect("command runs").1
}

#[test]
fn preset_classification_passes_with_three_branches() {
    let r = report(&["classify", "--preset", "h4"]);
    assert!(r.passed(), "{}", r.to_text());
    assert_eq!(r.tables["branches"].as_array().unwrap().len(), 3);
    assert_eq!(r.tables["locations"]["standard"]["a3"], "z");
    assert_eq!(r.tables["locations"]["jordanian"]["a1"], "z");
}

#[test]
fn one_dimensional_file_classifies_trivially() {
    let r = report(&["classify", "--algebra", &data("one_dim.txt")]);
    assert!(r.passed(), "{}", r.to_text());
    let branches = r.tables["branches"].as_array().unwrap();
    assert_eq!(branches.len(), 1);
    assert_eq!(branches[0]["coboundary"], true);
}

#[test]
fn sl2_file_is_coboundary() {
    let r = report(&["classify", "--algebra", &data("sl2.txt")]);
    assert!(r.passed(), "{}", r.to_text());
    assert_eq!(r.tables["family"]["parameters"].as_array().unwrap().len(), 3);
}

#[test]
fn parse_errors_carry_line_and_column() {
    let path = data("bad_syntax.txt");
    match run_command(["qosc", "classify", "--algebra", path.as_str()]) {
        Err(e @ CliError::Input { line, .. }) => {
            assert_eq!(line, 3);
            assert_eq!(e.exit_code(), 2);
            assert!(e.to_string().contains("bad_syntax.txt:3:"), "{e}");
        }
        other => panic!("expected an input error, got {other:?}"),
    }
}

#[test]
fn jacobi_violation_is_a_failed_check() {
    let r = report(&["classify", "--algebra", &data("not_jacobi.txt")]);
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.checks[0].name, "lie_axioms");
    assert!(r.checks[0].detail.contains("Jacobi"));
}

#[test]
fn usage_errors_are_reported() {
    for argv in [
        vec!["qosc"],
        vec!["qosc", "frobnicate"],
        vec!["qosc", "verify-hopf", "--order", "0"],
        vec!["qosc", "verify-hopf", "--order", "x"],
        vec!["qosc", "classify", "--preset", "sl2"],
    ] {
        let err = run_command(argv.clone()).unwrap_err();
        assert!(matches!(err, CliError::Usage(_)), "{argv:?}");
        assert_eq!(err.exit_code(), 2, "{argv:?}");
    }
}

#[test]
fn missing_file_is_an_error() {
    let err = run_command(["qosc", "classify", "--algebra", "/nonexistent/alg.txt"]).unwrap_err();
    assert!(matches!(err, CliError::Io { .. }));
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let a = report(&["verify-frt"]);
    let b = report(&["verify-frt"]);
    assert_eq!(a.canonical_json(), b.canonical_json());
    assert_eq!(a.schema_version, SCHEMA_VERSION);
    assert_eq!(Report::from_json(&a.to_json()).unwrap(), a);
}

#[test]
fn text_and_json_agree_on_checks() {
    let r = report(&["verify-sklyanin"]);
    let text = r.to_text();
    for c in &r.checks {
        assert!(text.contains(&format!("{} {}: {}", c.status.as_str(), c.name, c.detail)));
    }
    assert_eq!(r.tables["sklyanin"]["global_sign"], "-1");
}

#[test]
fn order_flag_is_recorded() {
    let r = report(&["verify-boson", "--order", "3"]);
    assert!(r.passed(), "{}", r.to_text());
    assert_eq!(r.inputs["order"], 3);
}

#[test]
fn hopf_report_tabulates_antipode() {
    let r = report(&["verify-hopf", "--order", "3"]);
    assert!(r.passed(), "{}", r.to_text());
    for g in ["N", "A+", "A-", "M"] {
        assert!(r.tables["antipode"].get(g).is_some(), "{g}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_qosc");
    let ok = Command::new(bin).args(["verify-frt", "--json"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let parsed = Report::from_json(std::str::from_utf8(&ok.stdout).unwrap()).unwrap();
    assert!(parsed.passed());
    let fail = Command::new(bin).args(["classify", "--algebra", &data("not_jacobi.txt")]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));
    let usage = Command::new(bin).arg("bogus").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    assert!(!usage.stderr.is_empty());
}

#[test]
fn schema_file_matches_report_fields() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema/report-v1.schema.json");
    let schema: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(schema["properties"]["schema_version"]["const"], SCHEMA_VERSION);
    let report: serde_json::Value = serde_json::from_str(&report(&["verify-frt"]).to_json()).unwrap();
    let mut fields: Vec<&str> = report.as_object().unwrap().keys().map(String::as_str).collect();
    let mut required: Vec<&str> = schema["required"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    fields.sort();
    required.sort();
    assert_eq!(fields, required);
}
