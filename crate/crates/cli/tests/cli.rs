use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pointed-hopf")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn check<'a>(doc: &'a Value, name: &str) -> &'a Value {
    doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("check {name} missing"))
}

/// Compare against a stored snapshot; set UPDATE_GOLDEN=1 to rewrite it.
fn golden(name: &str, out: &Output) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let actual = String::from_utf8(out.stdout.clone()).unwrap();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

#[test]
fn report_h0_mu1_at_3_1_2() {
    let out = run(&["--p", "3", "--s", "1", "--t", "2", "--lambda", "0", "--mu", "1", "report", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["instance"]["dim"], 54);
    assert_eq!(check(&doc, "dimension")["observed"], 54);
    assert_eq!(check(&doc, "blocks")["observed"], serde_json::json!([27, 27]));
    assert_eq!(check(&doc, "simples")["observed"], serde_json::json!([1, 1]));
    assert_eq!(check(&doc, "ext_diag")["observed"], serde_json::json!([2, 2]));
    assert_eq!(check(&doc, "wildness")["observed"], serde_json::json!(["WILD", "WILD"]));
    assert!(doc["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
    golden("report_3_1_2_l0_m1.json", &out);
}

#[test]
fn report_char2_at_2_1_3() {
    let out = run(&["--p", "2", "--s", "1", "--t", "3", "report"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["instance"]["dim"], 96);
    assert_eq!(check(&doc, "blocks")["observed"], serde_json::json!([32, 32, 32]));
    assert_eq!(check(&doc, "ext_diag")["observed"], serde_json::json!([2, 2, 2]));
    assert_eq!(check(&doc, "ext_offdiag")["status"], "pass");
    assert_eq!(check(&doc, "wildness")["observed"], serde_json::json!(["WILD", "WILD", "WILD"]));
    golden("report_2_1_3.json", &out);
}

#[test]
fn simples_of_local_algebra() {
    let out = run(&["--p", "3", "--s", "1", "--t", "1", "--lambda", "1", "--mu", "0", "simples"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(check(&doc, "simples")["observed"], serde_json::json!([1]));
    assert_eq!(check(&doc, "local_algebra")["observed"], "local algebra");
    golden("simples_3_1_1_l1_m0.json", &out);
}

#[test]
fn empty_command_list_prints_instance_only() {
    let out = run(&["--p", "3", "--t", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["checks"], serde_json::json!([]));
    assert_eq!(doc["instance"]["dim"], 54);
}

#[test]
fn wildness_rows_unknown_for_nonlocal_blocks() {
    let out = run(&["--p", "3", "--t", "2", "--lambda", "1", "--mu", "1", "wildness", "--format", "md"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| wildness_block_0 | pass |"));
    assert!(text.contains("| wildness_block_1 | unknown |"));
    assert!(text.contains("| check | status | observed | expected | claim |"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["--p", "3", "--t", "2", "--lambda", "1", "--mu", "1", "--seed", "7", "report"][..],
        &["--p", "5", "--t", "2", "--lambda", "1", "--format", "md", "report"][..],
    ] {
        let (a, b) = (run(args), run(args));
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn injected_fault_fails_naming_the_relation() {
    let out = run(&["--p", "3", "--t", "2", "--inject-fault", "drop-group-commutator", "report"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json_of(&out);
    let c = check(&doc, "relations");
    assert_eq!(c["status"], "fail");
    assert_eq!(c["observed"]["failed"], "bg = ga + gb");
}

#[test]
fn invalid_configuration_exits_2() {
    for args in [
        &["--p", "4", "--t", "1", "report"][..],
        &["--p", "3", "--t", "3", "report"][..],
        &["--p", "2", "--t", "3", "--lambda", "1", "report"][..],
        &["--p", "3", "--t", "2", "--mu", "x", "report"][..],
        &["--p", "3", "--t", "2", "--unknown-flag"][..],
        &["--p", "3", "--t", "2", "tensor", "--i", "0", "--j", "5"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn extension_field_scalar_literal() {
    let out = run(&["--p", "3", "--t", "4", "--lambda", "1", "--mu", "1,1", "simples"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["instance"]["mu"], "1,1");
    assert_eq!(check(&doc, "simples")["observed"], serde_json::json!([1, 3, 3, 3]));
}

#[test]
fn normalized_lambda_reports_certificate_and_unsupported_covers() {
    let out = run(&["--p", "3", "--t", "2", "--lambda", "2", "--mu", "1", "report"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(check(&doc, "normalization")["status"], "pass");
    assert_eq!(check(&doc, "projective_1")["status"], "unsupported");
}

#[test]
fn tensor_of_induced_simples() {
    let out = run(&["--p", "3", "--t", "2", "--lambda", "1", "tensor", "--i", "1", "--j", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(check(&doc, "tensor_socle")["observed"]["socle"], serde_json::json!([[0, 1]]));
}
