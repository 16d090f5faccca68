//! End-to-end tests of the binary: output contents and the 0/1/2 exit code
//! contract.

use std::process::{Command, Output};

fn bridgekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bridgekit")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn assert_code(out: &Output, want: i32) {
    assert_eq!(
        out.status.code(),
        Some(want),
        "stdout: {}\nstderr: {}",
        stdout(out),
        stderr(out)
    );
}

#[test]
fn validate_reports_both_verdicts() {
    let ok = bridgekit(&["validate", "4", "6", "2"]);
    assert_code(&ok, 0);
    assert!(stdout(&ok).contains("valid: 3 crossings"));

    let bad = bridgekit(&["validate", "4 6 3"]);
    assert_code(&bad, 1);
    assert!(stderr(&bad).contains("odd"), "{}", stderr(&bad));

    let dup = bridgekit(&["validate", "4 4 2"]);
    assert_code(&dup, 1);
}

#[test]
fn bridges_prints_sequence_and_count() {
    let out = bridgekit(&["bridges", "4 6 2"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("sequence: UOUOUO"), "{text}");
    assert!(text.contains("bridges: 3"), "{text}");
}

#[test]
fn realize_prints_pd_and_rejects_nonplanar() {
    let out = bridgekit(&["realize", "4 6 2"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("crossings: 3"), "{text}");
    assert!(text.contains("writhe:"), "{text}");
    assert_eq!(text.matches("X ").count(), 3, "{text}");

    let bad = bridgekit(&["realize", "-8 -10 -2 -4 -6"]);
    assert_code(&bad, 1);
    assert!(stderr(&bad).contains("embedding"), "{}", stderr(&bad));
}

#[test]
fn alexander_det_and_jones() {
    let out = bridgekit(&["alexander", "4 6 2"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("alexander: 1*t^2 + -1*t^1 + 1*t^0"), "{text}");
    assert!(text.contains("determinant: 3"), "{text}");

    let out = bridgekit(&["det", "4 6 8 2"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out).trim(), "5");

    let out = bridgekit(&["jones", "4 6 8 2"]);
    assert_code(&out, 0);
    assert!(stdout(&out).contains("t^-2"), "{}", stdout(&out));

    let malformed = bridgekit(&["det", "4 6"]);
    assert_code(&malformed, 2);
}

#[test]
fn jones_guard_is_an_input_limit() {
    // a 25-crossing alternating code, over the default guard of 24
    let code: Vec<String> = (1..=25)
        .map(|k| {
            let v = 2 * k + 24;
            (if v > 50 { v - 50 } else { v }).to_string()
        })
        .collect();
    let mut args = vec!["jones"];
    args.extend(code.iter().map(String::as_str));
    let out = bridgekit(&args);
    assert_code(&out, 2);
    assert!(stderr(&out).contains("guard"), "{}", stderr(&out));

    let tight = bridgekit(&["jones", "--guard", "4", "4 6 8 2"]);
    assert_code(&tight, 0);

    let too_tight = bridgekit(&["jones", "--guard", "3", "4 6 8 2"]);
    assert_code(&too_tight, 2);
}

#[test]
fn rational_and_cf_conversions() {
    let out = bridgekit(&["rational", "3/2"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out).trim(), "4 6 2");

    let link = bridgekit(&["rational", "2/3"]);
    assert_code(&link, 1);
    assert!(stderr(&link).contains("2-component"), "{}", stderr(&link));

    let bad = bridgekit(&["rational", "x/2"]);
    assert_code(&bad, 2);

    let zero_den = bridgekit(&["rational", "1/0"]);
    assert_code(&zero_den, 2);

    let expand = bridgekit(&["cf", "5/2"]);
    assert_code(&expand, 0);
    assert_eq!(stdout(&expand).trim(), "[2, 2]");

    let evaluate = bridgekit(&["cf", "2", "2"]);
    assert_code(&evaluate, 0);
    assert_eq!(stdout(&evaluate).trim(), "5/2");

    let mid_zero = bridgekit(&["cf", "0", "0"]);
    assert_code(&mid_zero, 1);
}

#[test]
fn montesinos_builds_the_catalog_diagram() {
    let out = bridgekit(&["montesinos", "(0; 1/3, 1/2, 1/3, 1/3)"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("dt: 6 14 22 18 20 16 2 10 12 8 4"), "{text}");
    assert!(text.contains("bridge index: 4"), "{text}");

    let bad = bridgekit(&["montesinos", "(0; 1/2, 3/1)"]);
    assert_code(&bad, 2);
}

#[test]
fn canon_prints_the_least_relabeling() {
    let out = bridgekit(&["canon", "4 6 2"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out).trim(), "-4 -6 -2");
}

#[test]
fn verify_catalog_subsets() {
    let out = bridgekit(&["verify", "11a1", "11a367", "--level", "bridges", "--format", "lines"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out), "11a1 PASS\n11a367 PASS\n");

    let fail = bridgekit(&["verify", "11a212", "--level", "bridges", "--format", "lines"]);
    assert_code(&fail, 1);
    assert!(stdout(&fail).starts_with("11a212 FAIL"), "{}", stdout(&fail));

    let human = bridgekit(&["verify", "11a2", "--level", "full", "--jobs", "2"]);
    assert_code(&human, 0);
    assert!(stdout(&human).contains("1 entries at level full: 1 passed, 0 failed"));

    let unknown = bridgekit(&["verify", "nope"]);
    assert_code(&unknown, 2);

    let bad_level = bridgekit(&["verify", "11a1", "--level", "good"]);
    assert_code(&bad_level, 2);
}

#[test]
fn verify_reads_the_corpus_env_file() {
    let dir = std::env::temp_dir();
    let path = dir.join("bridgekit_cli_test_corpus.txt");
    std::fs::write(&path, "# test\nk : 3 | 4 6 2 | 4 6 2\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_bridgekit"))
        .args(["verify", "--format", "lines"])
        .env("BRIDGEKIT_CORPUS", &path)
        .output()
        .unwrap();
    assert_code(&out, 0);
    assert_eq!(stdout(&out), "k PASS\n");

    std::fs::write(&path, "broken line\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_bridgekit"))
        .args(["verify"])
        .env("BRIDGEKIT_CORPUS", &path)
        .output()
        .unwrap();
    assert_code(&out, 2);
    assert!(stderr(&out).contains("line 1"), "{}", stderr(&out));
    std::fs::remove_file(&path).ok();
}

#[test]
fn usage_errors_exit_2() {
    let out = bridgekit(&["alexander"]);
    assert_code(&out, 2);
    let out = bridgekit(&["frobnicate"]);
    assert_code(&out, 2);
}
