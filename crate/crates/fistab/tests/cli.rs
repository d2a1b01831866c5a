use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn fistab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fistab"))
        .args(args)
        .env_remove("FISTAB_MAX_N")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

#[test]
fn exit_codes() {
    assert_eq!(fistab(&["--help"]).status.code(), Some(0));
    assert_eq!(fistab(&["no-such-command"]).status.code(), Some(64));
    assert_eq!(fistab(&["os-scan", "--n-min", "2"]).status.code(), Some(64));
    assert_eq!(
        fistab(&["character", "--lambda", "3+x"]).status.code(),
        Some(1)
    );
    // Pairing with the trivial character gives 1/2.
    let half = fistab(&["decompose", "--json", r#"{"1+1": 0, "2": 1}"#]);
    assert_eq!(half.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&half.stderr).starts_with("error:"));
}

#[test]
fn character_values() {
    let v = json_of(&fistab(&["character", "--lambda", "2+1"]));
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["character"]["3"], -1);
    assert_eq!(v["character"]["2+1"], 0);
}

#[test]
fn decompose_regular_representation() {
    let v = json_of(&fistab(&[
        "decompose",
        "--json",
        r#"{"1+1+1": 6, "2+1": 0, "3": 0}"#,
    ]));
    assert_eq!(v["dimension"], 6);
    assert_eq!(v["decomposition"]["2+1"], 2);
    assert_eq!(v["decomposition"]["3"], 1);
    assert_eq!(v["decomposition"]["1+1+1"], 1);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["os-scan", "--n-min", "2", "--n-max", "7", "--k", "1"];
    let a = fistab(&args);
    let b = fistab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_file_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = fistab(&[
        "table1",
        "--row",
        "moduli",
        "--i",
        "2",
        "--out",
        path_str(&path),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["N"], 12);
    assert_eq!(v["stability_type"], serde_json::json!([8, 4]));

    let text = fistab(&[
        "bounds", "--alpha", "0", "--beta", "1", "--i", "3", "--format", "text",
    ]);
    assert_eq!(text.status.code(), Some(0));
    assert!(!String::from_utf8_lossy(&text.stdout)
        .trim_start()
        .starts_with('{'));

    let csv = fistab(&[
        "m-module", "--lambda", "1", "--n-min", "1", "--n-max", "3", "--format", "csv",
    ]);
    assert_eq!(csv.status.code(), Some(0));
    let body = String::from_utf8(csv.stdout).unwrap();
    assert!(body.lines().next().unwrap().starts_with("table,"));
}

#[test]
fn config_entries_yield_to_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("scan.cfg");
    std::fs::write(
        &cfg,
        "# desk scan\nn-min = 2\nn-max = 6\nk = 2\na-max = 0\n",
    )
    .unwrap();
    let v = json_of(&fistab(&[
        "--config",
        path_str(&cfg),
        "os-scan",
        "--k",
        "1",
    ]));
    assert_eq!(v["k"], 1);
    assert_eq!(v["window"], serde_json::json!([2, 6]));
    assert!(v["coinvariants"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["a"] == 0));

    let missing = fistab(&[
        "--config",
        path_str(&dir.path().join("nope")),
        "table1",
        "--i",
        "1",
    ]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn desk_limit_and_override() {
    let big = [
        "os-scan", "--n-min", "10", "--n-max", "11", "--k", "1", "--a-max", "0",
    ];
    assert_eq!(fistab(&big).status.code(), Some(1));

    let raised = Command::new(env!("CARGO_BIN_EXE_fistab"))
        .args(big)
        .env("FISTAB_MAX_N", "11")
        .output()
        .unwrap();
    assert_eq!(raised.status.code(), Some(0));

    let mut forced = big.to_vec();
    forced.push("--allow-large");
    let v = json_of(&fistab(&forced));
    assert_eq!(v["betti"]["11"], 55);
}

#[test]
fn m_module_output_feeds_the_analyses() {
    let dir = tempfile::tempdir().unwrap();
    let seq = dir.path().join("m1.json");
    let out = fistab(&[
        "m-module",
        "--lambda",
        "1",
        "--n-min",
        "1",
        "--n-max",
        "7",
        "--out",
        path_str(&seq),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let scan = json_of(&fistab(&["stability-scan", "--input", path_str(&seq)]));
    assert_eq!(scan["stable_from"], 2);
    assert_eq!(scan["label"], "consistent with N = 2 on [1, 7]");

    let poly = json_of(&fistab(&[
        "fit-charpoly",
        "--input",
        path_str(&seq),
        "--degree-bound",
        "1",
    ]));
    assert_eq!(poly["polynomial"], "Z1");
    assert_eq!(poly["weighted_degree"], 1);
}

#[test]
fn dimension_polynomial_from_inline_dims() {
    let v = json_of(&fistab(&[
        "fit-dimpoly",
        "--dims",
        "2:1,3:3,4:6,5:10,6:15",
        "--degree-bound",
        "2",
    ]));
    assert_eq!(v["degree"], 2);
}

#[test]
fn kunneth_and_wreath() {
    let v = json_of(&fistab(&[
        "kunneth",
        "--graded-dims",
        "1,2,1",
        "--n",
        "3",
        "--i",
        "2",
    ]));
    // H^2 of the six-torus.
    assert_eq!(v["dimension"], 15);
    let w = json_of(&fistab(&[
        "wreath-scan",
        "--graded-dims",
        "1,1",
        "--i-max",
        "2",
        "--n-max",
        "6",
    ]));
    // Invariants of the exterior algebra on the permutation representation.
    assert_eq!(w["degrees"][1]["values"]["5"], 1);
    assert_eq!(w["degrees"][2]["values"]["5"], 0);
    assert_eq!(w["degrees"][2]["constant_from"], 1);
}
