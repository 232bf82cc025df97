//! Black-box tests of the `bigcm` binary: output formats, exit codes, and
//! the session-file workflow.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bigcm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bigcm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn temp_session(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("bigcm-test-{name}-{}.ring", std::process::id()));
    fs::write(&path, text).unwrap();
    path
}

#[test]
fn gb_output_is_deterministic() {
    let args = ["gb", "--ring", "poly2-7", "x^2 - y", "y^2"];
    let a = bigcm(&args);
    let b = bigcm(&args);
    assert_eq!(a.status.code(), Some(0));
    let text = stdout(&a);
    assert_eq!(text, stdout(&b));
    assert!(text.contains("y^2"), "{text}");
    assert!(text.contains("x^2 + 6*y"), "{text}");
}

#[test]
fn polynomials_print_in_canonical_form() {
    let out = bigcm(&["gb", "--ring", "poly3-7", "3*x^2*y - z"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).contains("3*x^2*y + 6*z"),
        "coefficients normalize into 0..p: {}",
        stdout(&out)
    );
}

#[test]
fn member_exits_zero_on_member_one_otherwise() {
    let yes = bigcm(&["member", "--ring", "poly2-7", "--ideal", "x^2, y", "x^2 + y"]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout(&yes).contains("member: true"), "{}", stdout(&yes));

    let no = bigcm(&["member", "--ring", "poly2-7", "--ideal", "x^2, y", "x"]);
    assert_eq!(no.status.code(), Some(1));
    let text = stdout(&no);
    assert!(text.contains("member: false"), "{text}");
    assert!(text.contains("normal form: x"), "{text}");
}

#[test]
fn unknown_ring_is_a_usage_error() {
    let out = bigcm(&["gb", "--ring", "no-such-ring", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no-such-ring"), "{}", stderr(&out));
}

#[test]
fn unknown_closure_spec_is_a_usage_error() {
    let out = bigcm(&["member", "--closure", "mystery:e=1", "--ideal", "x", "x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = bigcm(&["gb", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exceeding_the_degree_bound_exits_three() {
    let out = bigcm(&[
        "fclosure",
        "--ring",
        "cubic-cone-2",
        "--ideal",
        "x^3, y",
        "--e-max",
        "1",
        "--degree-bound",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    assert!(
        stderr(&out).contains("exceeded certified bound"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn session_file_defines_a_working_ring() {
    let path = temp_session(
        "quotient",
        "p: 2\nvars: x y z\nrelations: x^3 + y^3 + z^3\nideal I: x, y\n",
    );
    let out = bigcm(&[
        "fclosure",
        "--ring",
        path.to_str().unwrap(),
        "--ideal",
        "I",
        "--e-max",
        "1",
    ]);
    fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("z^2"), "closure must pick up z^2: {text}");
}

#[test]
fn session_file_modules_are_addressable() {
    let path = temp_session(
        "module",
        "p: 7\nvars: x y\nmodule M: rank 2\nrow: x, -y\n",
    );
    let out = bigcm(&[
        "phantom",
        "--ring",
        path.to_str().unwrap(),
        "--rel",
        "x, -y",
        "--w",
        "1, 0",
    ]);
    fs::remove_file(&path).ok();
    // The extension class of this injection is x, nonzero mod y: not phantom.
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
    assert!(
        stdout(&out).contains("phantom under identity: false"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn composite_modulus_is_rejected_with_position() {
    let path = temp_session("badmod", "p: 6\nvars: x\n");
    let out = bigcm(&["gb", "--ring", path.to_str().unwrap(), "x"]);
    fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("parse error at 1:4: modulus not prime: 6"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn colon_lists_the_extra_generator() {
    let out = bigcm(&["colon", "--ring", "segre-7", "--ideal", "b, d", "--by", "a - e"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("c*g"), "{}", stdout(&out));
}

#[test]
fn check_axioms_human_output_has_a_summary() {
    let out = bigcm(&["check-axioms", "--count", "5", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("summary:"), "{text}");
    assert!(text.contains("0 fail"), "{text}");
}

#[test]
fn check_axioms_json_is_valid_and_self_describing() {
    let out = bigcm(&["check-axioms", "--count", "5", "--seed", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["command"], "check-axioms");
    assert_eq!(doc["seed"], 3);
    assert!(doc["reports"].as_array().is_some_and(|r| !r.is_empty()));
}

#[test]
fn repro_command_passes_end_to_end() {
    let out = bigcm(&["repro-example-5-2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("result: pass"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn corpus_selftest_passes() {
    let out = bigcm(&["corpus-selftest"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn modify_chain_reports_stages() {
    let out = bigcm(&["modify-chain", "--koszul-seed", "--stages", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("stage 0"), "{text}");
    assert!(text.contains("stage 2"), "{text}");
}
