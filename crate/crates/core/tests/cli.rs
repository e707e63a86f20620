use std::io::Write;

use hamspec::graph::{graph6, Graph};
use hamspec::harness::cli::run_cli;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_cli(
        std::iter::once("hamspec").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn check_k6_is_guaranteed_everywhere() {
    let k6 = graph6::encode(&Graph::complete(6).unwrap());
    let (code, out, _) = run(&["check", &k6, "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for key in ["thm1_path", "thm1_cycle", "thm2_path", "thm2_cycle"] {
        assert_eq!(v[key], "guaranteed", "{key}");
    }
    assert_eq!(v["fact1"], "cycle_guaranteed");
    assert_eq!(v["extremal"], "none");
}

#[test]
fn check_text_summary() {
    let (code, out, _) = run(&["check", "DQc"]);
    assert_eq!(code, 0);
    assert!(out.contains("consistent true"), "{out}");
}

#[test]
fn extremal_kinds() {
    let (code, out, _) = run(&["extremal", "--n", "6", "--kind", "e"]);
    assert_eq!(code, 0);
    let (_, json) = out.split_once('\n').unwrap();
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    assert_eq!(v["thm1_cycle"], "exceptional");
    assert_eq!(v["extremal"], "K_{n-1}+e");
}

#[test]
fn verify_corpus_file_and_bad_input() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "A_\nE~~w").unwrap();
    let path = file.path().to_str().unwrap();
    let (code, out, _) = run(&["verify", "--file", path, "--jobs", "1"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("2 graphs"));

    let (code, _, err) = run(&["verify", "--n", "9"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    let (code, _, _) = run(&["verify", "--n", "5", "--file", path]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["check", "A_", "--tolerance", "-1"]);
    assert_eq!(code, 2);
}

#[test]
fn the_binary_runs() {
    let status = std::process::Command::new(env!("CARGO_BIN_EXE_hamspec"))
        .args(["verify", "--n", "9"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(2));
    let ok = std::process::Command::new(env!("CARGO_BIN_EXE_hamspec"))
        .args(["check", "A_"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
}
