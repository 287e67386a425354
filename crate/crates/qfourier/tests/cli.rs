//! End-to-end tests of the `qfourier` binary: subcommand reports, the
//! circuit file format, and exit codes.

use serde_json::Value;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn qfourier(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfourier"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let output = qfourier(args);
    assert!(
        output.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("report is valid JSON")
}

#[test]
fn eval_reports_expectation() {
    let xrot = fixture("xrot.json");
    let report = report(&["eval", "--circuit", &xrot, "--theta", "0"]);
    assert!((report["value"].as_f64().unwrap() - 1.0).abs() <= 1e-9);
}

#[test]
fn eval_output_is_bit_stable() {
    let xrot = fixture("xrot.json");
    let args = ["eval", "--circuit", &xrot, "--theta", "0.7324"];
    let a = qfourier(&args);
    let b = qfourier(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn grad_matches_negative_sine() {
    let xrot = fixture("xrot.json");
    for method in ["fourier", "shift2"] {
        let report = report(&[
            "grad",
            "--circuit",
            &xrot,
            "--theta",
            "1.5707963267948966",
            "--method",
            method,
        ]);
        let gradient = report["gradient"][0].as_f64().unwrap();
        assert!(
            (gradient + 1.0).abs() <= 1e-8,
            "{method}: gradient {gradient}"
        );
        let expected_evals = if method == "shift2" { 2 } else { 3 };
        assert_eq!(report["evaluations"].as_u64().unwrap(), expected_evals);
    }
}

#[test]
fn shift4_works_on_three_level_spectra() {
    let zz = fixture("zz.json");
    let fourier = report(&[
        "grad",
        "--circuit",
        &zz,
        "--theta",
        "0.4",
        "--method",
        "fourier",
    ]);
    let shift4 = report(&[
        "grad",
        "--circuit",
        &zz,
        "--theta",
        "0.4",
        "--method",
        "shift4",
    ]);
    let a = fourier["gradient"][0].as_f64().unwrap();
    let b = shift4["gradient"][0].as_f64().unwrap();
    assert!((a - b).abs() <= 1e-8, "fourier {a} vs shift4 {b}");
    assert_eq!(shift4["evaluations"].as_u64().unwrap(), 4);
    assert_eq!(fourier["evaluations"].as_u64().unwrap(), 5);
}

#[test]
fn spectrum_reports_transmon_difference_set() {
    let transmon = fixture("transmon.json");
    let report = report(&["spectrum", "--circuit", &transmon]);
    let param = &report["parameters"][0];
    assert_eq!(
        param["D"].as_array().unwrap().len(),
        9,
        "nine distinct frequencies"
    );
    let d: Vec<i64> = param["D"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_i64().unwrap())
        .collect();
    assert_eq!(d, vec![-6, -5, -4, -1, 0, 1, 4, 5, 6]);
    assert_eq!(param["evaluations_needed"].as_u64().unwrap(), 9);
    assert!((param["alpha"].as_f64().unwrap() - 0.5).abs() <= 1e-9);
    let levels: Vec<i64> = param["levels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_i64().unwrap())
        .collect();
    assert_eq!(levels, vec![0, 1, 5, 6]);
}

#[test]
fn fourier_equidistant_and_random_agree() {
    let yz = fixture("yz.json");
    let equidistant = report(&[
        "fourier",
        "--circuit",
        &yz,
        "--theta",
        "0.3,0.9",
        "--param",
        "1",
        "--method",
        "equidistant",
    ]);
    let random = report(&[
        "fourier",
        "--circuit",
        &yz,
        "--theta",
        "0.3,0.9",
        "--param",
        "1",
        "--method",
        "random",
        "--seed",
        "11",
    ]);
    assert_eq!(equidistant["samples_used"].as_u64().unwrap(), 3);
    assert_eq!(random["samples_used"].as_u64().unwrap(), 3);
    let coeff =
        |rep: &Value, idx: usize, part: &str| rep["coefficients"][idx][part].as_f64().unwrap();
    for idx in 0..3 {
        assert_eq!(
            equidistant["coefficients"][idx]["k"],
            random["coefficients"][idx]["k"]
        );
        assert!((coeff(&equidistant, idx, "re") - coeff(&random, idx, "re")).abs() <= 1e-7);
        assert!((coeff(&equidistant, idx, "im") - coeff(&random, idx, "im")).abs() <= 1e-7);
    }
}

#[test]
fn fourier_reports_aliasing_fallback() {
    let transmon = fixture("transmon.json");
    let report = report(&[
        "fourier",
        "--circuit",
        &transmon,
        "--theta",
        "0",
        "--param",
        "1",
        "--method",
        "equidistant",
    ]);
    assert!(report["aliased_fallback"].as_bool().unwrap());
    assert_eq!(report["samples_used"].as_u64().unwrap(), 13);
    let random = self::report(&[
        "fourier",
        "--circuit",
        &transmon,
        "--theta",
        "0",
        "--param",
        "1",
        "--method",
        "random",
    ]);
    assert_eq!(random["samples_used"].as_u64().unwrap(), 9);
    assert_eq!(random["evaluations"].as_u64().unwrap(), 9);
}

#[test]
fn train_reaches_ground_state() {
    let yz = fixture("yz.json");
    let report = report(&["train", "--circuit", &yz, "--theta0", "0,0"]);
    assert!((report["final_energy"].as_f64().unwrap() + 1.0).abs() <= 1e-8);
    assert_eq!(report["stop"].as_str().unwrap(), "converged");
    let evals: u64 = report["steps"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["evaluations"].as_u64().unwrap())
        .sum();
    assert_eq!(report["total_evaluations"].as_u64().unwrap(), evals);
}

#[test]
fn train_with_shots_runs() {
    let yz = fixture("yz.json");
    let report = report(&[
        "train",
        "--circuit",
        &yz,
        "--theta0",
        "0,0",
        "--max-sweeps",
        "3",
        "--tol",
        "1e-3",
        "--shots",
        "20000",
        "--seed",
        "4",
    ]);
    assert!(report["final_energy"].as_f64().unwrap() <= -0.9);
}

#[test]
fn eval_with_shots_reports_stderr() {
    let xrot = fixture("xrot.json");
    let report = report(&[
        "eval",
        "--circuit",
        &xrot,
        "--theta",
        "1.0471975511965976",
        "--shots",
        "100000",
        "--seed",
        "2",
    ]);
    let value = report["value"].as_f64().unwrap();
    let stderr = report["stderr"].as_f64().unwrap();
    assert!((value - 0.5).abs() <= 5.0 * stderr);
}

#[test]
fn malformed_file_exits_one() {
    let output = qfourier(&[
        "eval",
        "--circuit",
        &fixture("malformed.json"),
        "--theta",
        "0",
    ]);
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("line"), "stderr names the line: {stderr}");
}

#[test]
fn incommensurable_spectrum_exits_two() {
    let output = qfourier(&["spectrum", "--circuit", &fixture("irrational.json")]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("not commensurable"));
}

#[test]
fn shift2_refuses_wide_spectra() {
    let output = qfourier(&[
        "grad",
        "--circuit",
        &fixture("transmon.json"),
        "--theta",
        "0",
        "--method",
        "shift2",
    ]);
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("shift2"), "explains the refusal: {stderr}");
    // shift4 is refused too: the transmon support is wider than {0,+-1,+-2}
    let output = qfourier(&[
        "grad",
        "--circuit",
        &fixture("transmon.json"),
        "--theta",
        "0",
        "--method",
        "shift4",
    ]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn unknown_gate_exits_one() {
    let dir = std::env::temp_dir().join("qfourier_cli_tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("unknown_gate.json");
    std::fs::write(
        &path,
        r#"{
            "version": 1,
            "qubits": 1,
            "state": {"basis": "0"},
            "observable": {"pauli_sum": [{"coeff": 1.0, "word": "Z"}]},
            "elements": [{"fixed": {"gate": "Q", "targets": [0]}}]
        }"#,
    )
    .unwrap();
    let output = qfourier(&["eval", "--circuit", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("unknown gate"));
}

#[test]
fn dimension_mismatch_exits_one() {
    let xrot = fixture("xrot.json");
    let output = qfourier(&["eval", "--circuit", &xrot, "--theta", "0.1,0.2"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("parameter"));
}

#[test]
fn matrix_state_and_observable_forms_load() {
    // density-matrix state and dense-matrix observable exercise the
    // remaining schema branches
    let dir = std::env::temp_dir().join("qfourier_cli_tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dense_forms.json");
    std::fs::write(
        &path,
        r#"{
            "version": 1,
            "qubits": 1,
            "state": {"density": [[[0.5,0],[0.5,0]],[[0.5,0],[0.5,0]]]},
            "observable": {"matrix": [[[0,0],[1,0]],[[1,0],[0,0]]]},
            "elements": [
                {"param": {"index": 1, "generator": {"matrix": [[[0.5,0],[0,0]],[[0,0],[-0.5,0]]]}, "targets": [0]}}
            ]
        }"#,
    )
    .unwrap();
    // state |+><+|, observable X, RZ(theta): <X> = cos(theta)
    let report = report(&[
        "eval",
        "--circuit",
        path.to_str().unwrap(),
        "--theta",
        "0.6",
    ]);
    assert!((report["value"].as_f64().unwrap() - 0.6f64.cos()).abs() <= 1e-9);
}
