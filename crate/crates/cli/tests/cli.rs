//! End-to-end tests of the `plethys` binary: command output, JSON shape,
//! and exit-code contract.

use std::process::{Command, Output};

fn plethys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plethys"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn split_and_qword_text_output() {
    let out = plethys(&["split", "5", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(5,3) = (2,1) + (3,2)");

    let out = plethys(&["qword", "2", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("D[1]"), "{}", text);
    assert!(text.contains("D[0]"), "{}", text);
}

#[test]
fn apply_parses_operators_and_functions() {
    // (1/M)[D_1, D_0] applied to 1 equals D_1 D_0 1 - D_0 D_1 1 over M.
    let out = plethys(&["apply", "(1/M)*[D[1],D[0]]", "1"]);
    assert!(out.status.success());
    let direct = plethys(&["qapply", "2", "1", "1"]);
    assert_eq!(stdout(&out), stdout(&direct));

    // Bad input reports a parse error and fails.
    let out = plethys(&["apply", "(1/M", "1"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("parse error"), "{}", err);
}

#[test]
fn negut_apply_matches_qapply() {
    let a = plethys(&["negut-apply", "2", "1", "e[2]"]);
    assert!(a.status.success(), "{:?}", a);
    let b = plethys(&["qapply", "2", "1", "e[2]"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn checks_set_exit_codes() {
    let out = plethys(&["negut-check", "3", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pass"));

    let out = plethys(&["tq-check", "4", "3"]);
    assert!(out.status.success());

    // Non-co-prime input is an error, not a crash.
    let out = plethys(&["negut-check", "4", "2"]);
    assert!(!out.status.success());
}

#[test]
fn sss_check_reports_vanishing() {
    let out = plethys(&["sss-check", "[D[1],[D[2],D[0]]]"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("true"));

    let out = plethys(&["sss-check", "D[1]", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["vanishes"], serde_json::json!(false));
}

#[test]
fn suite_runs_selected_entries_as_json() {
    let out = plethys(&["suite", "split-invariant", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["id"], "q-construction");
    assert_eq!(entries[0]["verdict"], "pass");

    let out = plethys(&["suite", "no-such-id"]);
    assert!(!out.status.success());
}

#[test]
fn dump_htilde_degree_two() {
    let out = plethys(&["dump-htilde", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    // H~[2] = s[2] + q s[1,1]; H~[1,1] = s[2] + t s[1,1].
    assert!(text.contains("H~[2]"), "{}", text);
    assert!(text.contains("H~[1,1]"), "{}", text);
}
