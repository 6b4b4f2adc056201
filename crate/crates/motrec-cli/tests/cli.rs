//! Contract tests for the `motrec` binary: exit codes, report shapes and
//! byte-for-byte determinism.

use std::process::{Command, Output};

fn motrec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motrec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn generate_outputs_prefix() {
    let out = motrec(&["generate", "--source", "sturmian:2", "--length", "10"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "aabaabaaab");
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        vec!["generate", "--source", "nope", "--length", "10"],
        vec!["generate", "--length", "10"],
        vec!["complexity", "--source", "fibonacci", "--n-max", "5", "--k", "2"],
        vec!["frobnicate"],
    ] {
        let out = motrec(&args);
        assert_eq!(out.status.code(), Some(1), "args={args:?}");
    }
}

#[test]
fn help_and_version_exit_0() {
    assert!(motrec(&["--help"]).status.success());
    assert!(motrec(&["--version"]).status.success());
}

#[test]
fn verify_match_exits_0_and_mismatch_exits_2() {
    let matching = motrec(&[
        "verify", "--theorem", "sturmian", "--source", "fibonacci", "--k", "1", "--power", "1",
        "--letter", "c", "--n-max", "20",
    ]);
    assert_eq!(matching.status.code(), Some(0), "{}", stdout(&matching));
    let text = stdout(&matching);
    assert!(text.starts_with("n,branch,closed,empirical,match\n"));
    assert_eq!(text.lines().count(), 21);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));

    // A Sturmian closed form cannot match a full-complexity source.
    let mismatching = motrec(&[
        "verify", "--theorem", "sturmian", "--source", "champernowne", "--k", "1", "--power", "1",
        "--letter", "c", "--n-max", "6",
    ]);
    assert_eq!(mismatching.status.code(), Some(2), "{}", stdout(&mismatching));
    assert!(stdout(&mismatching).lines().any(|l| l.ends_with(",false")));
}

#[test]
fn complexity_report_is_deterministic() {
    let args = [
        "complexity", "--source", "fibonacci", "--k", "2", "--power", "3", "--letter", "c",
        "--n-max", "12", "--format", "json",
    ];
    let a = motrec(&args);
    let b = motrec(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "identical runs must produce identical bytes");
}

#[test]
fn complexity_csv_rows() {
    let out = motrec(&["complexity", "--source", "fibonacci", "--n-max", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,P,S,Pf"));
    assert_eq!(lines.next(), Some("1,2,1,2"));
    assert_eq!(lines.next(), Some("2,3,1,3"));
    assert_eq!(lines.next(), Some("3,4,1,4"));
    assert_eq!(lines.next(), Some("4,5,1,5"));
}

#[test]
fn check_mr_reports_failures_for_transformed_word() {
    let out = motrec(&[
        "check-mr", "--source", "fibonacci", "--k", "2", "--power", "3", "--letter", "c",
        "--n-max", "4", "--mod-max", "5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n,factor,modulus,verdict,witness\n"));
    assert!(text.lines().any(|l| l.contains(",fail,")));
}

#[test]
fn transform_reads_stdin() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_motrec"))
        .args(["transform", "--k", "1", "--power", "2", "--letter", "z"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"abab\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "zzbzzb");
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join("motrec-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let out = motrec(&[
        "complexity", "--source", "periodic:ab", "--n-max", "3", "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("n,P,S,Pf\n"));
    std::fs::remove_file(&path).unwrap();
}
