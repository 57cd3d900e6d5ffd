use std::process::{Command, Output};

use serde_json::Value;

fn schubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .env_remove("SCHUBERT_CACHE")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn count_json_fields() {
    let out = schubert(&["count", "--regime", "complex", "-d", "3", "-k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let body = json(&out);
    for field in [
        "command",
        "regime",
        "d",
        "k",
        "m",
        "value",
        "feasible",
        "orientable_grassmannian",
        "sym_power_orientable",
        "euler_number_defined",
        "cached",
        "elapsed_ms",
        "engine_version",
        "parameters",
        "feasibility",
    ] {
        assert!(body.get(field).is_some(), "missing {field}");
    }
    assert_eq!(body["value"], "27");
    assert_eq!(body["m"], 2);
}

#[test]
fn exit_codes() {
    let even = schubert(&["count", "--regime", "real", "-d", "2", "-k", "2"]);
    assert_eq!(even.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&even.stderr).contains("even"));

    let infeasible = schubert(&["count", "--regime", "complex", "-d", "2", "-k", "2"]);
    assert_eq!(infeasible.status.code(), Some(2));
    assert_eq!(json(&infeasible)["value"], Value::Null);

    assert_eq!(schubert(&["count", "--bogus"]).status.code(), Some(64));
    assert_eq!(schubert(&["nonsense"]).status.code(), Some(64));
    assert_eq!(
        schubert(&["count", "--regime", "complex", "-d", "3", "-k", "2", "--format", "csv"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(schubert(&["schur", "--partition", "(1,2)"]).status.code(), Some(64));
    assert_eq!(schubert(&["--help"]).status.code(), Some(0));
}

#[test]
fn cache_hit_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["count", "--regime", "real", "-d", "3", "-k", "2", "--cache-dir", cache];
    let first = json(&schubert(&args));
    assert_eq!(first["cached"], false);
    let second = json(&schubert(&args));
    assert_eq!(second["cached"], true);
    assert_eq!(first["value"], second["value"]);

    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "{\"truncated").unwrap();
    }
    let third = json(&schubert(&args));
    assert_eq!(third["cached"], false);
    assert_eq!(third["value"], "189");

    let mut bypass = args.to_vec();
    bypass.push("--no-cache");
    assert_eq!(json(&schubert(&bypass))["cached"], false);
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_schubert"))
            .args(["incidence", "--regime", "real", "-n", "5"])
            .env("SCHUBERT_CACHE", dir.path())
            .output()
            .unwrap()
    };
    assert_eq!(json(&run())["cached"], false);
    let body = json(&run());
    assert_eq!(body["cached"], true);
    assert_eq!(body["value"], "42");
}

#[test]
fn asymptote_csv() {
    let out = schubert(&["asymptote", "--family", "incidence", "--values", "1,5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("family,parameter,value,exact_log"));
    assert_eq!(lines.len(), 5);
    assert!(lines.iter().any(|l| l.starts_with("incidence-real,5,42,")));
}

#[test]
fn lambda_and_dump_poly() {
    let out = schubert(&[
        "lambda",
        "--regime",
        "real",
        "--poly",
        "36 * x1^7 x2^3 + -153 * x1^5 x2^5 + 36 * x1^3 x2^7",
        "--partition",
        "(5,5,5,5)",
        "--grid",
        "64",
    ]);
    let body = json(&out);
    assert_eq!(body["value"], "-189");
    assert_eq!(body["sign_certain"], false);
    assert!((body["numeric"]["re"].as_f64().unwrap() + 189.0).abs() < 1e-6);

    let out = schubert(&["count", "--regime", "real", "-d", "3", "-k", "2", "--dump-poly"]);
    assert_eq!(
        json(&out)["poly"],
        "36 * x1^7 x2^3 + -153 * x1^5 x2^5 + 36 * x1^3 x2^7"
    );
}

#[test]
fn scan_and_feasibility() {
    let body = json(&schubert(&["scan", "-d", "3", "--grid", "120"]));
    assert_eq!(body["closed_form_max"], "225");
    assert_eq!(body["sign_constant"], true);
    assert_eq!(body["argmax_on_curve"], true);

    let body = json(&schubert(&["feasibility", "--regime", "real", "-d", "5", "-k", "2"]));
    assert_eq!(body["m"], 14);
    assert_eq!(body["feasible"], true);
    assert_eq!(schubert(&["scan", "-d", "4"]).status.code(), Some(2));
    assert_eq!(schubert(&["scan", "-d", "3", "--grid", "10"]).status.code(), Some(64));
}
