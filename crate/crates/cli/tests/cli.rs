//! End-to-end tests driving the compiled binary: flag handling, report
//! emission, and exit codes.

use std::io::Write;
use std::process::{Command, Output};

use braided::{Report, Status};

fn braided_cmd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braided"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn parse_reports(output: &Output) -> Vec<Report> {
    String::from_utf8_lossy(&output.stdout)
        .lines()
        .map(|line| serde_json::from_str(line).expect("each line is a report"))
        .collect()
}

#[test]
fn single_check_emits_passing_reports() {
    let out = braided_cmd(&["--check", "braiding-valid", "--family", "dj", "--n", "2"]);
    assert!(out.status.success());
    let reports = parse_reports(&out);
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].check, "braiding-valid");
    assert_eq!(reports[0].status, Status::Pass);
    assert_eq!(reports[0].params["family"], "dj");
    assert_eq!(reports[0].params["n"], "2");
}

#[test]
fn json_lines_round_trip() {
    let out = braided_cmd(&["--check", "trace-identities", "--family", "flip"]);
    assert!(out.status.success());
    for line in String::from_utf8_lossy(&out.stdout).lines() {
        let report: Report = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&report).unwrap(), line);
    }
}

#[test]
fn unknown_check_is_a_usage_error() {
    let out = braided_cmd(&["--check", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("unknown check"));
    assert!(stderr.contains("braiding-valid"));
}

#[test]
fn quick_suite_passes_and_is_sorted() {
    let out = braided_cmd(&["--suite", "quick"]);
    assert!(out.status.success());
    let reports = parse_reports(&out);
    assert!(reports.len() > 20);
    assert!(reports.iter().all(|r| r.status != Status::Fail));
    let keys: Vec<_> = reports
        .iter()
        .map(|r| (r.check.clone(), r.params.clone()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn suite_output_is_deterministic() {
    let strip = |out: &Output| {
        parse_reports(out)
            .into_iter()
            .map(|mut r| {
                r.elapsed_millis = 0;
                r
            })
            .collect::<Vec<_>>()
    };
    let a = braided_cmd(&["--suite", "quick"]);
    let b = braided_cmd(&["--suite", "quick"]);
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn rmatrix_file_defines_the_symmetry() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "dim = 2").unwrap();
    for (i, j, k, l) in [(1, 1, 1, 1), (1, 2, 2, 1), (2, 1, 1, 2), (2, 2, 2, 2)] {
        writeln!(
            file,
            "[[entries]]\ni = {}\nj = {}\nk = {}\nl = {}\nvalue = \"1\"",
            i, j, k, l
        )
        .unwrap();
    }
    let path = file.path().to_str().unwrap().to_string();
    let out = braided_cmd(&["--rmatrix", &path, "--check", "braiding-valid"]);
    assert!(out.status.success());
    let reports = parse_reports(&out);
    assert_eq!(reports[0].params["family"], "file");
    assert_eq!(reports[0].params["kind"], "involutive");
    assert_eq!(reports[0].status, Status::Pass);
}

#[test]
fn malformed_rmatrix_is_an_error() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "dim = 2\nentries = \"oops\"").unwrap();
    let path = file.path().to_str().unwrap().to_string();
    let out = braided_cmd(&["--rmatrix", &path, "--check", "braiding-valid"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn out_flag_writes_the_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reports.ndjson");
    let out = braided_cmd(&[
        "--check",
        "capelli",
        "--n",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let report: Report = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(report.check, "capelli");
    assert_eq!(report.status, Status::Pass);
}

#[test]
fn failing_check_sets_exit_code_one() {
    let out = braided_cmd(&["--check", "site-evaluation", "--sites", "1,1"]);
    assert_eq!(out.status.code(), Some(1));
    let reports = parse_reports(&out);
    assert_eq!(reports[0].status, Status::Fail);
    assert!(reports[0].witness.is_some());
}

#[test]
fn inapplicable_checks_are_skipped_not_failed() {
    let out = braided_cmd(&["--check", "trig-limit", "--family", "flip"]);
    assert!(out.status.success());
    let reports = parse_reports(&out);
    assert_eq!(reports[0].status, Status::Skipped);
    assert_eq!(reports[0].params["reason"], "requires a Hecke symmetry");
}
