use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    run_env(args, None)
}

fn run_env(args: &[&str], max_n: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_genocchi"));
    cmd.args(args).env_remove("GENOCCHI_MAX_N");
    if let Some(v) = max_n {
        cmd.env("GENOCCHI_MAX_N", v);
    }
    cmd.output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

const JSON_COMMANDS: &[&[&str]] = &[
    &["seq", "h", "--count", "9", "--json"],
    &["seq", "H", "--count", "6", "--json"],
    &["poly", "hq", "--n", "5", "--json"],
    &["poly", "barc", "--n", "5", "--json"],
    &["series", "f2", "--order", "4", "--json"],
    &["enumerate", "motzkin", "--n", "4", "--json"],
    &["enumerate", "admissible", "--n", "3", "--json"],
    &["enumerate", "dellac", "--n", "3", "--json"],
    &["verify", "--n-max", "2", "--json"],
];

#[test]
fn json_round_trips_byte_identically() {
    for args in JSON_COMMANDS {
        for line in stdout(args).lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(serde_json::to_string(&v).unwrap(), line, "{args:?}");
        }
    }
}

#[test]
fn outputs_are_deterministic() {
    for args in JSON_COMMANDS {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
    let a = stdout(&["verify", "--n-max", "4", "--seed", "7"]);
    assert_eq!(a, stdout(&["verify", "--n-max", "4", "--seed", "7"]));
    assert!(a.contains("seed=7"));
}

#[test]
fn seq_json_shape() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["seq", "H", "--count", "3", "--json"])).unwrap();
    assert_eq!(v["label"], "H_{2n-1}");
    assert_eq!(v["values"], serde_json::json!(["1", "2", "8"]));
}

#[test]
fn poly_variants() {
    assert_eq!(stdout(&["poly", "tildehq", "--n", "3"]).trim(), "1 + 3*q + 2*q^2 + q^3");
    assert_eq!(stdout(&["poly", "barc", "--n", "4"]).trim(), "1 + 3*q + 2*q^2 + q^3");
    assert_eq!(stdout(&["poly", "barc", "--n", "1"]).trim(), "1");
}

#[test]
fn enumerate_limit_keeps_total() {
    let out = stdout(&["enumerate", "dellac", "--n", "4", "--limit", "2"]);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[2], "total: 38");
    let json = stdout(&["enumerate", "motzkin", "--n", "5", "--limit", "0", "--json"]);
    assert_eq!(json.trim(), r#"{"total":"21"}"#);
}

#[test]
fn counts() {
    assert_eq!(stdout(&["count", "dumont", "--n", "3"]).trim(), "7");
    assert_eq!(stdout(&["count", "triangles", "--n", "3"]).trim(), "38");
}

#[test]
fn series_text_forms() {
    assert_eq!(stdout(&["series", "hn", "--order", "6"]).trim(), "1 1 2 7 38 295 3098");
    let f1 = stdout(&["series", "f1", "--order", "2"]);
    assert_eq!(f1, "s^0: 1\ns^1: 1\ns^2: 1 + q\n");
}

#[test]
fn custom_series_from_file() {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let spec = dir.join("catalan.toml");
    std::fs::write(&spec, "kind = \"S\"\nc = [1, 1, 1, 1, 1, 1, 1, 1]\n").unwrap();
    let out = stdout(&["series", "custom", "--spec", spec.to_str().unwrap(), "--order", "6"]);
    assert_eq!(out.trim(), "1 1 2 5 14 42 132");

    let bad = dir.join("bad.toml");
    std::fs::write(&bad, "kind = \"Q\"\n").unwrap();
    assert_eq!(run(&["series", "custom", "--spec", bad.to_str().unwrap(), "--order", "3"]).status.code(), Some(2));
    assert_eq!(run(&["series", "custom", "--order", "3"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["seq", "h"]).status.code(), Some(2));
    assert_eq!(run(&["seq", "x", "--count", "2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n-max", "9"]).status.code(), Some(2));
    assert_eq!(run(&["count", "dumont", "--n", "5"]).status.code(), Some(3));
    assert_eq!(run(&["enumerate", "dellac", "--n", "10"]).status.code(), Some(3));
    assert_eq!(run_env(&["seq", "h", "--count", "5"], Some("4")).status.code(), Some(3));
    assert_eq!(run_env(&["seq", "h", "--count", "4"], Some("4")).status.code(), Some(0));
    assert_eq!(run(&["verify", "--n-max", "2"]).status.code(), Some(0));
}
