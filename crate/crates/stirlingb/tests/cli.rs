//! End-to-end tests of the command-line surface: output goldens, JSON
//! shapes, exit codes, and determinism.

use std::process::{Command, Output};

fn stirlingb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stirlingb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stirlingb_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stirlingb"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn table_second_kind_csv_golden() {
    let out = stirlingb(&["table", "S", "--max-n", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n,k,poly\n0,0,1\n1,0,1\n1,1,1\n2,0,1\n2,1,2+q+q^2\n2,2,1\n"
    );
}

#[test]
fn table_first_kind_row_two() {
    let out = stirlingb(&["table", "s", "--max-n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("2,0,2+q\n"));
    assert!(text.contains("2,1,3+q\n"));
    assert!(text.contains("2,2,1\n"));
}

#[test]
fn table_shifted_small() {
    let out = stirlingb(&["table", "ss", "--max-n", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,k,poly\n0,0,1\n1,0,1\n1,1,1\n");
}

#[test]
fn table_r_variant() {
    let out = stirlingb(&["table", "s", "--max-n", "2", "--r", "1"]);
    assert!(out.status.success());
    // s^B_q(2,1,1) = 2+q sits at n=2, k=1.
    assert!(stdout(&out).contains("2,1,2+q\n"));
    let out = stirlingb(&["table", "ss", "--max-n", "2", "--r", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_json_lines_parse() {
    let out = stirlingb(&["table", "S", "--max-n", "2", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    let cell: serde_json::Value = serde_json::from_str(lines[4]).unwrap();
    assert_eq!(cell["n"], 2);
    assert_eq!(cell["k"], 1);
    assert_eq!(cell["poly"]["coeffs"], serde_json::json!([2, 1, 1]));
}

#[test]
fn stat_perm_paper_golden() {
    let out = stirlingb(&["stat", "perm", "[-7,-5,8,-9,-4,-6,-1,-3,2]"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"inv_B\":12,\"neg\":3,\"nl\":5,\"finv\":27,\"sfinv\":32,\"k\":3,\
         \"ss_inv\":34,\"p_A\":11,\"p_B\":4,\"p_C\":2,\"p_D\":2}\n"
    );
}

#[test]
fn stat_identity_perm_is_all_zeros() {
    let out = stirlingb(&["stat", "perm", "[1,2,3]"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for field in ["inv_B", "neg", "nl", "finv", "sfinv", "k", "ss_inv"] {
        assert_eq!(v[field], 0, "{field}");
    }
}

#[test]
fn stat_word1_golden() {
    let out = stirlingb(&["stat", "word1", "(1,1)(-2,1)(-3,1)(-2,3)(-2,-2)(-4,1)(1,-2)(-3,2)(-2,-4)"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"inv_B\":12,\"neg\":3,\"nl\":5,\"finv\":27,\"sfinv\":32,\"k\":3}\n"
    );
}

#[test]
fn stat_word2_weight() {
    let out = stirlingb(&["stat", "word2", "1,0,-1,2,-2,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{\"weight\":8}\n");
}

#[test]
fn stat_invalid_word_names_condition() {
    let out = stirlingb(&["stat", "word2", "1,0,-2,2,0,-2,-1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("(2b)"), "{err}");
    assert!(err.contains("position 3"), "{err}");
}

#[test]
fn stat_parse_error_exits_two() {
    let out = stirlingb(&["stat", "perm", "not-a-window"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_streams_passing_reports() {
    let out = stirlingb(&["verify", "second-recursion", "--max-n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    for line in lines {
        let report: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(report["identity"], "second-recursion");
        assert_eq!(report["status"], "pass");
        assert!(report.get("counterexample").is_none());
    }
}

#[test]
fn verify_all_with_jobs() {
    let out = stirlingb(&["verify", "all", "--max-n", "3", "--jobs", "2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    for line in text.lines() {
        let report: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(report["status"], "pass", "{line}");
    }
}

#[test]
fn verify_unknown_identity_exits_two() {
    let out = stirlingb(&["verify", "no-such-identity", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identities_lists_all_ids() {
    let out = stirlingb(&["identities"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 20);
    assert!(text.contains("printed-h-lemma-fails"));
}

#[test]
fn object_guard_env_override() {
    let out = stirlingb_with_env(
        &["verify", "flag-decomposition", "--max-n", "3"],
        "STIRLINGB_MAX_OBJECTS",
        "10",
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("size guard"), "{}", stderr(&out));

    let out = stirlingb_with_env(
        &["verify", "flag-decomposition", "--max-n", "3"],
        "STIRLINGB_MAX_OBJECTS",
        "100000",
    );
    assert!(out.status.success());
}

#[test]
fn output_is_byte_deterministic() {
    let first = stirlingb(&["table", "s", "--max-n", "5"]);
    let second = stirlingb(&["table", "s", "--max-n", "5"]);
    assert_eq!(first.stdout, second.stdout);
    let first = stirlingb(&["stat", "perm", "[-3,2,-1,5,-4]"]);
    let second = stirlingb(&["stat", "perm", "[-3,2,-1,5,-4]"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn usage_error_exits_two() {
    let out = stirlingb(&["table", "S"]);
    assert_eq!(out.status.code(), Some(2));
    let out = stirlingb(&["table", "x", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_overflow_is_loud() {
    // n = 30 exceeds 64-bit coefficients; the command must report the
    // overflow rather than print wrapped values.
    let out = stirlingb(&["table", "S", "--max-n", "30"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("overflow"), "{}", stderr(&out));
}

#[test]
fn closed_pipe_is_not_an_error() {
    use std::io::Read;
    // The triangle at n=18 (~300 KB) far exceeds the pipe buffer, so the
    // child blocks mid-write; closing our end must end it cleanly, the
    // way `stirlingb table ... | head` does.
    let mut child = Command::new(env!("CARGO_BIN_EXE_stirlingb"))
        .args(["table", "s", "--max-n", "18"])
        .stdout(std::process::Stdio::piped())
        .spawn()
        .expect("binary spawns");
    let mut stdout = child.stdout.take().unwrap();
    let mut buf = [0u8; 64];
    stdout.read_exact(&mut buf).unwrap();
    drop(stdout);
    let status = child.wait().unwrap();
    assert!(status.success(), "{status:?}");
}
