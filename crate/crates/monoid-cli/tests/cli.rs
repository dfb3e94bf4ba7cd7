//! Drives the installed binary end to end: documented examples, exit
//! codes, JSON schema stability, and the environment knobs.

use std::process::{Command, Output};

fn monoid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monoid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn monoid_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monoid"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--json", "--stable"]);
    let out = monoid(&full);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    serde_json::from_str(&stdout(&out)).expect("valid JSON")
}

#[test]
fn frobenius_examples() {
    for (args, expect) in [
        (&["frobenius", "--gens", "6,9,20"][..], "F = 43"),
        (&["frobenius", "--arith", "11,1,7"][..], "F = 21"),
        (&["frobenius", "--gens", "2,3"][..], "F = 1"),
    ] {
        let out = monoid(args);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out).trim(), expect);
    }
}

#[test]
fn lenset_examples() {
    assert_eq!(
        stdout(&monoid(&["lenset", "--arith", "11,1,7", "--n", "36"])).trim(),
        "L(36) = {2, 3}"
    );
    assert_eq!(
        json(&["lenset", "--arith", "11,1,7", "--n", "0"])["result"],
        serde_json::json!([0])
    );
    assert_eq!(
        json(&["lenset", "--arith", "11,1,7", "--n", "21"])["result"],
        serde_json::Value::Null
    );
}

#[test]
fn omit_check_examples() {
    let v = json(&[
        "omit-check",
        "--arith",
        "11,1,7",
        "--omit",
        "3,4,5",
        "--what",
        "lengths",
    ]);
    assert_eq!(v["result"]["lengths_equal"], serde_json::json!(false));
    assert_eq!(v["result"]["frobenius_equal"], serde_json::Value::Null);

    let v = json(&["omit-check", "--arith", "11,1,7", "--omit", "4"]);
    assert_eq!(v["result"]["lengths_equal"], serde_json::json!(true));
    assert_eq!(v["result"]["frobenius_equal"], serde_json::json!(true));
    assert_eq!(
        v["result"]["shortcut_used"],
        serde_json::json!("single_middle")
    );

    let v = json(&[
        "omit-check",
        "--arith",
        "14,1,7",
        "--omit",
        "6",
        "--what",
        "frobenius",
    ]);
    assert_eq!(v["result"]["frobenius_equal"], serde_json::json!(false));
    assert_eq!(v["result"]["lengths_equal"], serde_json::Value::Null);
}

#[test]
fn complex_examples() {
    let v = json(&["complex", "--arith", "11,1,7"]);
    assert_eq!(
        v["result"]["minimal_nonfaces"],
        serde_json::json!([[3, 4, 5]])
    );
    assert_eq!(v["result"]["downward_closed"], serde_json::json!(true));

    let v = json(&["complex", "--arith", "51,2,8"]);
    assert_eq!(v["result"]["downward_closed"], serde_json::json!(true));
    assert_eq!(
        v["result"]["minimal_nonfaces"],
        serde_json::json!([] as [u64; 0])
    );

    let v = json(&["complex", "--arith", "23,3,11"]);
    assert_eq!(v["result"]["maximal_faces"].as_array().unwrap().len(), 7);
}

#[test]
fn exit_codes_and_diagnostics() {
    let out = monoid(&["frobenius", "--gens", "4,6,8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("GcdNotOne"));
    assert!(stdout(&out).is_empty());

    let out = monoid(&["omit-check", "--arith", "11,1,7", "--omit", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("IndexOutOfRange"));

    let out = monoid(&["frobenius"]);
    assert_eq!(out.status.code(), Some(1));

    let out = monoid(&["frobenius", "--gens", "6,9,x"]);
    assert_eq!(out.status.code(), Some(1));

    let out = monoid(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn stable_json_reruns_are_byte_identical() {
    let args = [
        "omit-check",
        "--arith",
        "23,3,11",
        "--omit",
        "4,5",
        "--json",
        "--stable",
    ];
    let first = monoid(&args);
    let second = monoid(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    // keys are emitted sorted: re-serializing the parse reproduces the bytes
    let text = stdout(&first);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap(), text.trim_end());
    assert!(value.get("elapsed_ms").is_none());
}

#[test]
fn elapsed_is_reported_unless_stable() {
    let out = monoid(&["frobenius", "--gens", "6,9,20", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(value.get("elapsed_ms").is_some());
}

#[test]
fn oracle_budget_env_is_honored() {
    let out = monoid_env(
        &[
            "factorize",
            "--gens",
            "11,12,13,14,15,16,17,18",
            "--n",
            "400",
        ],
        "MONOID_ORACLE_BUDGET",
        "10",
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("OracleTooLarge"));

    let out = monoid_env(
        &["factorize", "--gens", "6,9,20", "--n", "29"],
        "MONOID_ORACLE_BUDGET",
        "1000000",
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn factorize_lists_every_vector() {
    let v = json(&[
        "factorize",
        "--gens",
        "11,12,13,14,15,16,17,18",
        "--n",
        "36",
    ]);
    assert_eq!(
        v["result"]["factorizations"],
        serde_json::json!([
            [0, 0, 0, 0, 0, 0, 0, 2],
            [0, 3, 0, 0, 0, 0, 0, 0],
            [1, 1, 1, 0, 0, 0, 0, 0],
            [2, 0, 0, 1, 0, 0, 0, 0],
        ])
    );
}

#[test]
fn apery_set_and_identity() {
    let v = json(&["apery", "--gens", "6,9,20", "--m", "6"]);
    assert_eq!(v["result"], serde_json::json!([0, 49, 20, 9, 40, 29]));
}

#[test]
fn lentable_rows_use_null_for_gaps() {
    let v = json(&["lentable", "--arith", "5,3,2", "--bound", "12"]);
    assert_eq!(
        v["result"],
        serde_json::json!([
            [0],
            null,
            null,
            null,
            null,
            [1],
            null,
            null,
            [1],
            null,
            [2],
            [1],
            null
        ])
    );
}

#[test]
fn scan_tightness_ranges() {
    let v = json(&["scan-tightness", "--w", "6..7", "--d", "1..2"]);
    let rows = v["result"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["largest_bad_a"], serde_json::json!(19));
    assert_eq!(rows[3]["largest_bad_a"], serde_json::json!(29));

    let v = json(&["scan-tightness", "--w", "8..6", "--d", "1..2"]);
    assert_eq!(v["result"].as_array().unwrap().len(), 0);

    let out = monoid(&["scan-tightness", "--w", "5", "--d", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("w >= 6"));
}

#[test]
fn survey_single_cells_match_complex() {
    let v = json(&["survey", "--a", "11", "--d", "1", "--w", "7"]);
    let rows = v["result"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["face_count"], serde_json::json!(14));
    assert_eq!(rows[0]["maximal_face_count"], serde_json::json!(3));
    assert_eq!(rows[0]["minimal_nonface_count"], serde_json::json!(1));
    assert_eq!(rows[0]["downward_closed"], serde_json::json!(true));

    let v = json(&["survey", "--a", "51", "--d", "2", "--w", "8"]);
    assert_eq!(v["result"][0]["face_count"], serde_json::json!(32));
    assert_eq!(
        v["result"][0]["minimal_nonface_count"],
        serde_json::json!(0)
    );
}

#[test]
fn thread_count_does_not_change_output() {
    let one = monoid(&[
        "complex",
        "--arith",
        "19,4,8",
        "--json",
        "--stable",
        "--threads",
        "1",
    ]);
    let many = monoid(&[
        "complex",
        "--arith",
        "19,4,8",
        "--json",
        "--stable",
        "--threads",
        "4",
    ]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn no_shortcut_agrees_with_shortcut() {
    let fast = monoid(&["complex", "--arith", "51,2,8", "--json", "--stable"]);
    let slow = monoid(&[
        "complex",
        "--arith",
        "51,2,8",
        "--json",
        "--stable",
        "--no-shortcut",
    ]);
    let fv: serde_json::Value = serde_json::from_str(&stdout(&fast)).unwrap();
    let sv: serde_json::Value = serde_json::from_str(&stdout(&slow)).unwrap();
    assert_eq!(fv["result"], sv["result"]);
    // only the parameter echo differs
    assert_eq!(fv["parameters"]["shortcut"], serde_json::json!(true));
    assert_eq!(sv["parameters"]["shortcut"], serde_json::json!(false));
}
