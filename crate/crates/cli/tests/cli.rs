//! Binary-level behavior: exit codes, output redirection, determinism.

use std::process::{Command, Output};

fn polite(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polite")).args(args).output().expect("binary runs")
}

#[test]
fn verify_passes_with_exit_zero_and_is_deterministic() {
    let first = polite(&["verify"]);
    assert_eq!(first.status.code(), Some(0), "{first:?}");
    let stdout = String::from_utf8(first.stdout).unwrap();
    assert!(stdout.ends_with("all 14 checks passed\n"), "{stdout}");
    let second = polite(&["verify"]);
    assert_eq!(String::from_utf8(second.stdout).unwrap(), stdout);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["table", "b", "--k", "0", "--pmax", "5"],
        vec!["table", "b", "--k", "1", "--pmax", "0"],
        vec!["sequence", "bogus", "--nmax", "3"],
        vec!["schema", "--level", "0"],
        vec!["schema", "--level", "21"],
        vec!["verify", "--nmax-oracle", "12"],
        vec!["bounds"],
        vec![],
    ] {
        let out = polite(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}: {out:?}");
    }
}

#[test]
fn out_flag_writes_the_file() {
    let dir = std::env::temp_dir().join(format!("polite-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b1.csv");
    let out = polite(&["table", "b", "--k", "1", "--pmax", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1;0\n2;1\n3;1\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn schema_prints_the_tuple() {
    let out = polite(&["schema", "--level", "2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1;3;2;4\n");
}

#[test]
fn bounds_row_one_shows_slashes() {
    let out = polite(&["bounds", "--nmax", "1"]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let row: Vec<&str> = stdout.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(row, ["1", "/", "/", "1", "1", "1.0000", "1"]);
}

#[test]
fn precision_flag_controls_ratio_rendering() {
    let out = polite(&["bounds", "--nmax", "3", "--precision", "1"]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let row3: Vec<&str> = stdout.lines().nth(3).unwrap().split_whitespace().collect();
    assert_eq!(row3, ["3", "0.5", "2", "4", "6", "1.5", "6"]);
}
