//! End-to-end tests of the `nlcalc` binary: argument grammar, exit codes,
//! output formats, and determinism, all through a real subprocess.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nlcalc"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout must be UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr must be UTF-8")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("binary must exit normally")
}

fn write_triangle(dir: &Path) -> String {
    let path = dir.join("triangle.lines");
    std::fs::write(
        &path,
        "# triangle in the plane x3 = 0\n\
         P = 1,0,0,0 ; Q = 0,1,0,0\n\
         P = 1,0,0,0 ; Q = 0,0,1,0\n\
         P = 0,1,0,0 ; Q = 0,0,1,0\n",
    )
    .unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn bound_table_and_rank_validation() {
    let out = run(&["bound", "--r", "3", "--d", "7..10"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let bounds: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    assert_eq!(bounds, vec!["8", "10", "12", "14"]);

    let out = run(&["bound", "--r", "5", "--d", "12"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out)
            .lines()
            .nth(1)
            .unwrap()
            .split_whitespace()
            .nth(1),
        Some("35")
    );

    // Rank below 3 is a usage error.
    let out = run(&["bound", "--r", "2", "--d", "12"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).starts_with("error:"));
}

#[test]
fn codim_named_family_and_json_schema() {
    let out = run(&[
        "codim", "--family", "coplanar", "-k", "3", "-d", "10", "--seed", "7", "--format", "json",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["family"], "coplanar");
    assert_eq!(doc["ideal_codim"], 30);
    assert_eq!(doc["family_dim"], 9);
    assert_eq!(doc["nl_codim"], 21);
    assert_eq!(doc["gh_bound"], 21);
    assert_eq!(doc["verdict"], "equality");
    assert_eq!(doc["certified"], true);
    assert_eq!(doc["seed"], 7);
}

#[test]
fn codim_file_below_window_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_triangle(dir.path());

    let out = run(&["codim", "--file", &path, "-d", "6"]);
    assert_eq!(code(&out), 3, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    assert!(
        row.contains("custom") && row.contains("false"),
        "row: {row}"
    );

    let out = run(&["codim", "--file", &path, "-d", "7"]);
    assert_eq!(code(&out), 0);

    // Parse failures are usage errors.
    let bad = dir.path().join("bad.lines");
    std::fs::write(&bad, "P = 1,0,0 ; Q = 0,1,0,0\n").unwrap();
    let out = run(&["codim", "--file", bad.to_str().unwrap(), "-d", "7"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("expected 4"));
}

#[test]
fn verify_sweep_clean_run() {
    let out = run(&[
        "verify",
        "--k",
        "2..4",
        "--d",
        "auto..12",
        "--families",
        "coplanar,generic,concurrent",
        "--seed",
        "11",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    // Every coplanar row carries the equality verdict.
    for line in text.lines().filter(|l| l.starts_with("coplanar")) {
        assert!(line.contains("equality"), "row: {line}");
    }
    assert!(text.contains("violations=0"));
    assert!(!text.contains("VIOLATION"));
}

#[test]
fn verify_bias_hook_exits_2_naming_family() {
    let out = run(&[
        "verify",
        "--k",
        "3",
        "--d",
        "8",
        "--families",
        "coplanar",
        "--seed",
        "5",
        "--inject-family-dim-bias",
        "1",
    ]);
    assert_eq!(code(&out), 2);
    let text = stdout(&out);
    let row = text.lines().find(|l| l.contains("VIOLATION")).unwrap();
    assert!(row.starts_with("coplanar"), "row: {row}");
}

#[test]
fn verify_usage_errors() {
    // Missing seed.
    let out = run(&["verify", "--k", "2", "--d", "8", "--families", "coplanar"]);
    assert_eq!(code(&out), 1);
    // Unknown family.
    let out = run(&[
        "verify",
        "--k",
        "2",
        "--d",
        "8",
        "--families",
        "weird",
        "--seed",
        "1",
    ]);
    assert_eq!(code(&out), 1);
    // Bad degree range.
    let out = run(&[
        "verify",
        "--k",
        "2",
        "--d",
        "9..6",
        "--families",
        "coplanar",
        "--seed",
        "1",
    ]);
    assert_eq!(code(&out), 1);
    // k below 2.
    let out = run(&[
        "verify",
        "--k",
        "1..3",
        "--d",
        "8",
        "--families",
        "coplanar",
        "--seed",
        "1",
    ]);
    assert_eq!(code(&out), 1);
    // Unknown flag (handled by the argument parser).
    let out = run(&["verify", "--nonsense"]);
    assert_eq!(code(&out), 1);
    // Help is not an error.
    let out = run(&["--help"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn hilbert_from_file_and_family() {
    let dir = tempfile::tempdir().unwrap();
    let pair = dir.path().join("skew.lines");
    std::fs::write(
        &pair,
        "P = 1,0,0,0 ; Q = 0,1,0,0\nP = 0,0,1,0 ; Q = 0,0,0,1\n",
    )
    .unwrap();
    let out = run(&["hilbert", "--file", pair.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("polynomial: P(t) = 2t + 2"));
    assert!(text.contains("genus: -1"));
    assert!(text.contains("connected: false"));

    let out = run(&[
        "hilbert", "--family", "coplanar", "-k", "3", "--seed", "9", "--d-max", "6", "--format",
        "csv",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("t,HF,P(t),h1"));
    assert_eq!(text.lines().count(), 8);
    assert!(text.contains("6,18,18,0"));
}

#[test]
fn audit_window_and_overrides() {
    let out = run(&["audit", "--r", "3..5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for expected in [
        "3  27   62   54   8",
        "4  64   217  192  25",
        "5  125  558  500  58",
    ] {
        assert!(
            text.contains(expected),
            "missing row {expected:?} in:\n{text}"
        );
    }

    let out = run(&["audit", "--r", "3", "--d", "20"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("degree"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "verify",
        "--k",
        "2..3",
        "--d",
        "auto..9",
        "--families",
        "generic,concurrent",
        "--seed",
        "42",
        "--format",
        "csv",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let json_args = [
        "codim",
        "--family",
        "concurrent",
        "-k",
        "4",
        "-d",
        "9",
        "--seed",
        "3",
        "--format",
        "json",
    ];
    let first = run(&json_args);
    let second = run(&json_args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let direct = run(&[
        "codim", "--family", "generic", "-k", "3", "-d", "8", "--seed", "2", "--format", "csv",
    ]);
    assert_eq!(code(&direct), 0);
    let redirected = run(&[
        "codim",
        "--family",
        "generic",
        "-k",
        "3",
        "-d",
        "8",
        "--seed",
        "2",
        "--format",
        "csv",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&redirected), 0);
    assert!(stdout(&redirected).is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn exact_only_policy_matches_two_prime() {
    fn args_for(policy: &'static str) -> [&'static str; 13] {
        [
            "codim",
            "--family",
            "coplanar",
            "-k",
            "4",
            "-d",
            "9",
            "--seed",
            "6",
            "--format",
            "csv",
            "--prime-policy",
            policy,
        ]
    }
    let fast = run(&args_for("two-prime"));
    let exact = run(&args_for("exact-only"));
    assert_eq!(code(&fast), 0);
    assert_eq!(code(&exact), 0);
    assert_eq!(fast.stdout, exact.stdout);
}
