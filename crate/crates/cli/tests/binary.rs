//! Runs the built binary to check the exit-code contract and determinism.

use std::process::{Command, Output};

fn polyk0(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyk0")).args(args).output().expect("spawn polyk0")
}

#[test]
fn success_prints_to_stdout() {
    let out = polyk0(&["lambda", "--i", "2", "--at", "-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1\n");
}

#[test]
fn passi_suite_exits_zero() {
    assert_eq!(polyk0(&["verify-all", "--suite", "passi"]).status.code(), Some(0));
}

#[test]
fn counterexample_exits_one() {
    let out = polyk0(&["verify-degree", "--map", "inputs/map_binom2.json", "--degree", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("fails"));
}

#[test]
fn usage_errors_exit_two_and_name_the_flag() {
    let out = polyk0(&["monoid-quotient", "--monoid", "inputs/monoid_n.json", "--degree", "-3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--degree"));

    let out = polyk0(&["--format", "xml", "lambda", "--i", "2", "--at", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--format"));

    let out = polyk0(&["k0", "--spec", "{\"pi0\": 3}"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--spec"));

    assert_eq!(polyk0(&[]).status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = polyk0(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("verify-all"));
}

#[test]
fn fixture_env_overrides_lookup() {
    let dir = std::env::temp_dir().join(format!("polyk0-fixtures-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("m.json"), "[[\"3\"]]").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_polyk0"))
        .env("POLYK0_FIXTURES", &dir)
        .args(["snf", "--matrix", "m.json"])
        .output()
        .unwrap();
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("invariant factors: [3]"));
}

#[test]
fn output_is_identical_across_runs() {
    let args = ["--format", "json", "--seed", "7", "verify-all", "--suite", "closed-form", "--suite", "dold-kan"];
    let a = polyk0(&args);
    let b = polyk0(&args);
    assert_eq!(a.status.code(), Some(0));
    // elapsed times are not part of the JSON report
    assert_eq!(a.stdout, b.stdout);
}
