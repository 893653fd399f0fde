//! End-to-end tests of the `polygauge` binary: subcommands, exit codes,
//! and the JSON report surface.

use std::process::{Command, Output};

fn polygauge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polygauge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn classify_fixture_text() {
    let out = polygauge(&["classify", "--fixture", "upper_real"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("type III"), "{text}");
    assert!(text.contains("c = 0"), "{text}");
    assert!(text.contains("d = (-1)"), "{text}");
}

#[test]
fn classify_weighted_json_round_trips() {
    let out = polygauge(&["classify", "weighted_linf:4", "--output", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["space_type"], "I");
    assert_eq!(parsed["c"], "1/4");
    // parsing and re-serializing is the identity
    assert_eq!(
        format!("{}\n", serde_json::to_string_pretty(&parsed).unwrap()),
        text
    );
}

#[test]
fn index_symmetric_fixture() {
    let out = polygauge(&["index", "linf_sym:2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("= 1,"), "{text}");
    assert!(
        text.contains("product identity (sup)(inf) = 1: true"),
        "{text}"
    );
}

#[test]
fn dual_norm_divergence() {
    let out = polygauge(&["dual-norm", "upper_real", "-1"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("+inf"), "{text}");
    assert!(text.contains("p ∉ X♭"), "{text}");
    assert!(text.contains("ray (-1)"), "{text}");
}

#[test]
fn missing_space_is_an_input_error() {
    let out = polygauge(&["classify", "no-such-file.json"]);
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
}

#[test]
fn witness_construction_and_preconditions() {
    let out = polygauge(&["witness", "upper_real", "upper_real", "--output", "json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["matrix"][0][0], "1");
    assert_eq!(parsed["discontinuity_ray"][0], "-1");

    // c(X) > 0 violates the hypotheses: exit code 2
    let out = polygauge(&["witness", "weighted_linf:2", "upper_real"]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
    assert!(stderr(&out).contains("precondition"), "{}", stderr(&out));
}

#[test]
fn opnorm_and_perturb_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let op_path = dir.path().join("row.json");
    std::fs::write(
        &op_path,
        r#"{"matrix": [["0","1"]], "domain": "referee_plane", "codomain": "upper_real"}"#,
    )
    .unwrap();

    let out = polygauge(&["opnorm", op_path.to_str().unwrap(), "--output", "json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["lc_norm"], "1");
    assert_eq!(parsed["continuous"], true);

    let out = polygauge(&[
        "perturb",
        op_path.to_str().unwrap(),
        "1/1000",
        "--output",
        "json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["perturbation_norm"], "1/1000");
    assert_eq!(parsed["discontinuity_ray"][0], "0");
    assert_eq!(parsed["discontinuity_ray"][1], "-1");
}

#[test]
fn malformed_operator_file_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let op_path = dir.path().join("bad.json");
    std::fs::write(
        &op_path,
        r#"{"matrix": [["0","x"]], "domain": "upper_real", "codomain": "upper_real"}"#,
    )
    .unwrap();
    let out = polygauge(&["opnorm", op_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("matrix[0][1]"), "{}", stderr(&out));
}

#[test]
fn verify_is_reproducible_and_json_round_trips() {
    let args = [
        "verify", "--seed", "7", "--cases", "4", "--dims", "1..2", "--output", "json",
    ];
    let a = polygauge(&args);
    assert!(a.status.success(), "{}", stderr(&a));
    let b = polygauge(&args);
    assert_eq!(
        stdout(&a),
        stdout(&b),
        "identical config must give identical bytes"
    );

    let parsed: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(parsed["ok"], true);
    assert_eq!(parsed["seed"], 7);
    assert_eq!(
        format!("{}\n", serde_json::to_string_pretty(&parsed).unwrap()),
        stdout(&a)
    );
}

#[test]
fn verify_with_zero_cases_is_empty_and_ok() {
    let out = polygauge(&["verify", "--cases", "0", "--output", "json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["ok"], true);
    assert_eq!(parsed["suites"].as_array().unwrap().len(), 0);
}

#[test]
fn bad_dims_flag_is_an_input_error() {
    let out = polygauge(&["verify", "--dims", "3..1"]);
    assert_eq!(out.status.code(), Some(1));
}
