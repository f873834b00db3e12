use std::io::Write;
use std::process::{Command, Output};

use clap::Parser;
use serde_json::Value;
use tourney_codes::tournament::paley_tournament;
use tourney_codes_cli::{recheck_embedding, run, Cli, Status};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_tourney-codes"));
    c.env_remove("TOURNEY_CODES_EIG_TOL")
        .env_remove("TOURNEY_CODES_BETA_TOL")
        .env_remove("TOURNEY_CODES_THREADS");
    c
}

fn exec(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

const ORDER_FOUR: &str = "4:111111\n4:111010\n4:011101\n4:011011\n";

#[test]
fn cycle_analysis() {
    let out = exec(&["analyze", "3:101"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["results"][0];
    assert_eq!(r["type"], 1);
    assert_eq!(r["rep_dim"], 1);
    assert!((r["alpha"]["re"].as_f64().unwrap() + 0.5).abs() < 1e-12);
    assert!((r["alpha"]["im"].as_f64().unwrap() - 0.75f64.sqrt()).abs() < 1e-12);
}

#[test]
fn order_four_batch_keeps_input_order() {
    let f = file(ORDER_FOUR);
    let out = exec(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let results = report["results"].as_array().unwrap();
    let dims: Vec<u64> = results.iter().map(|r| r["rep_dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [3, 2, 3, 2]);
    let lines: Vec<&str> = results.iter().map(|r| r["tournament"].as_str().unwrap()).collect();
    assert_eq!(lines, ORDER_FOUR.lines().collect::<Vec<_>>());
}

#[test]
fn empty_input_gives_empty_results() {
    let f = file("");
    let out = exec(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"], Value::Array(vec![]));
}

#[test]
fn parse_errors_exit_two_with_line_number() {
    let f = file("3:101\n\n# comment\n3:1x1\n");
    let out = exec(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_settings_exit_two() {
    assert_eq!(exec(&["--eig-tol", "-1", "analyze", "3:101"]).status.code(), Some(2));
    let out = bin().env("TOURNEY_CODES_THREADS", "many").args(["analyze", "3:101"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(exec(&["analyze", "4:11"]).status.code(), Some(2));
}

#[test]
fn tolerances_are_echoed() {
    let out = bin().env("TOURNEY_CODES_BETA_TOL", "1e-5").args(["--eig-tol", "1e-8", "analyze", "3:101"]).output().unwrap();
    let tol = &json(&out)["tolerances"];
    assert_eq!(tol["eig_rel"].as_f64(), Some(1e-8));
    assert_eq!(tol["beta_zero"].as_f64(), Some(1e-5));
}

#[test]
fn embeddings() {
    let out = exec(&["embed", "--check", "3:101"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["results"][0];
    assert_eq!(r["embedding"]["vectors"].as_array().unwrap().len(), 3);
    assert!(r["verification"]["max_deviation"].as_f64().unwrap() <= 1e-9);

    let p7 = paley_tournament(7).unwrap().to_line();
    let r = &json(&exec(&["embed", &p7]))["results"][0];
    assert_eq!(r["embedding"]["dim"], 3);
    let vectors = r["embedding"]["vectors"].as_array().unwrap();
    assert_eq!(vectors.len(), 7);
    assert!(vectors.iter().all(|v| v.as_array().unwrap().len() == 3));
}

#[test]
fn corrupted_embedding_is_an_inconsistency() {
    let p7 = paley_tournament(7).unwrap();
    let out = exec(&["embed", &p7.to_line()]);
    let mut e = json(&out)["results"][0]["embedding"].clone();
    assert!(recheck_embedding(&p7, &e).is_ok());
    let x = e["vectors"][2][1]["re"].as_f64().unwrap();
    e["vectors"][2][1]["re"] = (x + 1e-4).into();
    let err = recheck_embedding(&p7, &e).unwrap_err();
    assert_eq!(Status::from(&err).code(), 3);
}

#[test]
fn enumeration_and_switching() {
    let out = exec(&["--format", "tsv", "enumerate", "--n", "5"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 1 + 12);
    let out = exec(&["switching-class", "3:101"]);
    assert_eq!(json(&out)["results"].as_array().unwrap().len(), 2);
    assert_eq!(exec(&["enumerate", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn tight_counts() {
    for (d, want) in [("2", 2), ("4", 4), ("6", 8)] {
        let out = exec(&["count-tight", "--d", d]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(json(&out)["results"][0]["count"], want, "d = {d}");
    }
    let out = exec(&["count-tight", "--d", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("order 15"));

    let f = file(&format!("{}\n", paley_tournament(7).unwrap()));
    let out = exec(&["count-tight", "--d", "3", "--catalog", f.path().to_str().unwrap()]);
    let r = &json(&out)["results"][0];
    assert_eq!(r["count"], 1);
    assert_eq!(r["catalog_trusted"], true);
}

#[test]
fn output_is_deterministic() {
    let f = file(&"5:1011001110\n6:101100111010010\n".repeat(20));
    let path = f.path().to_str().unwrap();
    let a = exec(&["embed", path]);
    let b = bin().env("TOURNEY_CODES_THREADS", "1").args(["embed", path]).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verification_levels() {
    let out = exec(&["verify-paper", "--level", "quick"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(json(&out)["results"].as_array().unwrap().iter().all(|c| c["passed"] == true));

    let out = bin().env("TOURNEY_CODES_EIG_TOL", "0").args(["verify-paper"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("failed: order-four-rep"));
}

#[test]
fn full_verification_in_process() {
    let cli = Cli::try_parse_from(["tourney-codes", "verify-paper", "--level", "full"]).unwrap();
    let out = run(&cli, &["verify-paper".into(), "--level".into(), "full".into()]);
    assert_eq!(out.status, Status::Success, "{}", out.stdout);
    let report: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(report["results"].as_array().unwrap().len(), 10);
}
