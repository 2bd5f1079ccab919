use std::process::{Command, Output};

fn griesskit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_griesskit"))
        .args(args)
        .env_remove("GRIESSKIT_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn autos_reports_symmetric_group() {
    let o = griesskit(&["autos", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        json(&o),
        serde_json::json!({"group_order": 120, "expected": 120, "pass": true})
    );
}

#[test]
fn positivity_classification_rows() {
    let o = griesskit(&["positivity", "--n", "3", "--m-max", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<(u64, bool)> = json(&o)["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["m"].as_u64().unwrap(),
                r["positive_definite"].as_bool().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        rows,
        vec![
            (1, true),
            (2, true),
            (3, true),
            (4, false),
            (5, false),
            (6, false)
        ]
    );
}

#[test]
fn positivity_single_report() {
    let o = griesskit(&["positivity", "--n", "4", "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["positive_definite"], false);
    assert_eq!(v["detB_closed"], v["detB_direct"]);
    assert_eq!(v["gram"][0][0], "2/5");
}

#[test]
fn lattice_verify_tilde_passes() {
    let o = griesskit(&["lattice-verify", "--n", "3", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["family"], "tilde");
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));
}

#[test]
fn json_output_is_byte_stable() {
    for args in [
        &["griess", "--n", "4", "--m", "2"][..],
        &["scan", "--n", "4", "--m-max", "3"][..],
    ] {
        let a = griesskit(args);
        let b = griesskit(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn scan_has_one_row_per_grid_point() {
    let o = griesskit(&["scan", "--n", "5", "--m-max", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json(&o)["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 3 * 4);
    let keys: Vec<(u64, u64)> = rows
        .iter()
        .map(|r| (r["n"].as_u64().unwrap(), r["m"].as_u64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn csv_and_text_formats() {
    let o = griesskit(&["fusion", "--m", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("a,b,c"));
    assert!(out.contains("\"(1,2)\",\"(1,2)\",\"(1,1)\""));
    let o = griesskit(&["kac", "--m", "2", "--format", "csv"]);
    assert!(stdout(&o).contains(",\"3/80\""));
    let o = griesskit(&["spectrum", "--n", "4", "--m", "2", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pair  eigenvalue  multiplicity  expected"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kac.json");
    let o = griesskit(&["kac", "--m", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["central_charge"], "1/2");
}

#[test]
fn parameter_errors_exit_two_with_one_line() {
    for args in [
        &["griess", "--n", "9", "--m", "1"][..],
        &["griess", "--n", "4"][..],
        &["kac", "--m", "13"][..],
        &["positivity", "--n", "4"][..],
        &["lattice-verify", "--n", "4", "--m", "3"][..],
    ] {
        let o = griesskit(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(o.stdout.is_empty());
    }
    let o = griesskit(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn max_n_can_be_raised() {
    let o = Command::new(env!("CARGO_BIN_EXE_griesskit"))
        .args(["griess", "--n", "9", "--m", "1", "--format", "text"])
        .env("GRIESSKIT_MAX_N", "9")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}
