use std::process::{Command, Output};

use serde_json::Value;

fn planarq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planarq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn scan_schema_and_counts() {
    let out = planarq(&[
        "scan",
        "--p",
        "5",
        "--m",
        "1",
        "--methods",
        "theorem,det,brute",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for key in ["p", "m", "q", "seed", "version"] {
        assert!(
            v["meta"][key].is_number() || v["meta"][key].is_string(),
            "meta.{key}"
        );
    }
    let pairs = v["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 25);
    let first = &pairs[0];
    assert_eq!(first["A"], 0);
    assert_eq!(first["B"], 0);
    assert_eq!(first["branch"], "BranchBZero");
    assert!(first["witness"].is_null());
    let w = &pairs[1]["witness"];
    assert!(w["index"].is_number());
    assert_eq!(w["coeffs"].as_array().unwrap().len(), 3);
    assert_eq!(v["summary"]["planar_count"], 9);
    assert_eq!(v["summary"]["expected_count"], 9);
    assert_eq!(v["summary"]["disagreements"].as_array().unwrap().len(), 0);
    // timing is not part of the report
    assert!(!String::from_utf8_lossy(&out.stdout).contains("timing"));
}

#[test]
fn scan_q7_and_q3_policy() {
    let out = planarq(&["scan", "--p", "7", "--methods", "theorem,det"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["summary"]["planar_count"], 7);

    let out = planarq(&["scan", "--p", "3", "--methods", "theorem,brute"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["count_asserted"], false);
    assert_eq!(v["summary"]["theorem_subset"], true);
}

#[test]
fn scan_csv_has_header_and_rows() {
    let out = planarq(&["scan", "--p", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("A,B,theorem,det,brute,branch,witness_index,witness_coeffs")
    );
    assert_eq!(lines.count(), 25);
}

#[test]
fn scan_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = planarq(&["scan", "--p", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["meta"]["q"], 5);
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(planarq(&["scan", "--p", "9"]).status.code(), Some(1));
    assert_eq!(
        planarq(&["scan", "--p", "5", "--methods", "magic"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        planarq(&["verify", "--p", "5", "--a", "5", "--b", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(planarq(&["nonsense"]).status.code(), Some(1));
    assert_eq!(planarq(&["--help"]).status.code(), Some(0));
}

#[test]
fn size_limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_planarq"))
        .args(["scan", "--p", "5", "--methods", "det"])
        .env("PLANARQ_MAX_Q3", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit"));
}

#[test]
fn verify_dossiers() {
    let v = json(&planarq(&["verify", "--p", "5", "--a", "2", "--b", "1"]));
    assert_eq!(v["classification"], "Planar");
    assert_eq!(v["branch"], "BranchCubic");
    assert_eq!(v["h_point_count"], 0);
    let lines = v["linear_factors"].as_array().unwrap();
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().all(|l| l["ext_degree"] == 1));

    let out = planarq(&["verify", "--p", "5", "--a", "1", "--b", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["classification"], "NotPlanar");
    assert!(v["witness"].is_object());
    assert!(v["linear_factors"]
        .as_array()
        .unwrap()
        .iter()
        .any(|l| l["coeffs"] == serde_json::json!([1, 1, 1])));

    let v = json(&planarq(&["verify", "--p", "5", "--a", "2", "--b", "2"]));
    assert_eq!(v["classification"], "NotPlanar");
    assert_eq!(v["linear_factors"].as_array().unwrap().len(), 0);
    assert!(v["h_point_count"].as_u64().unwrap() > 0);
    assert!(v["problems"].as_array().unwrap().is_empty());
}

#[test]
fn identities_pass_and_fault_is_caught() {
    let out = planarq(&[
        "identities",
        "--p",
        "5",
        "--m",
        "1",
        "--samples",
        "1000",
        "--seed",
        "42",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = planarq(&[
        "identities",
        "--p",
        "3",
        "--m",
        "2",
        "--samples",
        "200",
        "--seed",
        "42",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = planarq(&["identities", "--p", "5", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn families_commands() {
    let v = json(&planarq(&["families", "list"]));
    assert_eq!(v.as_array().unwrap().len(), 11);

    let out = planarq(&["families", "check", "--id", "T3.5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)[0]["planar"], true);

    let out = planarq(&[
        "families", "check", "--id", "T2.2", "--p", "3", "--n", "4", "--k", "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        json(&out)[0]["violations"][0]["condition"],
        "n/GCD(k,n) odd"
    );

    // admissible but not planar: flagged
    let out = planarq(&[
        "families", "check", "--id", "T3.2", "--p", "3", "--k", "1", "--s", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)[0]["status"], "discrepancy");
}

#[test]
fn worker_count_does_not_change_output() {
    let a = planarq(&[
        "--workers",
        "1",
        "identities",
        "--p",
        "7",
        "--samples",
        "300",
        "--seed",
        "5",
    ]);
    let b = planarq(&[
        "identities",
        "--p",
        "7",
        "--samples",
        "300",
        "--seed",
        "5",
        "--workers",
        "3",
    ]);
    assert_eq!(a.stdout, b.stdout);
    let c = planarq(&["identities", "--p", "7", "--samples", "300", "--seed", "6"]);
    assert_eq!(c.status.code(), Some(0));
}
