//! End-to-end tests of the `opn` binary: exit codes, output schemas, and
//! byte-level determinism.

use std::path::Path;
use std::process::{Command, Output};

fn opn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opn"))
        .args(args)
        .env_remove("OPN_THREADS")
        .output()
        .expect("binary runs")
}

fn opn_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_opn"));
    cmd.args(args).env_remove("OPN_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = opn(&["scan", "--limit", "10", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        !stderr(&out).is_empty(),
        "usage text on the diagnostic stream"
    );
    assert!(stdout(&out).is_empty());
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    let out = opn(&[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = opn(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn zero_limit_is_a_usage_error() {
    let out = opn(&["scan", "--limit", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn roots_without_solutions_exits_one() {
    let out = opn(&["roots", "--p", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("no roots modulo 5"));

    let out = opn(&["roots", "--p", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("degenerate"));

    let out = opn(&["roots", "--p", "9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not prime"));

    let out = opn(&["roots", "--p", "7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{\"p\":7,\"r\":2,\"s\":4}\n");
}

#[test]
fn overflow_exits_three() {
    // For the largest 64-bit prime m, sigma(m^2) = m^2 + m + 1 is just
    // past 2^127 - 1.
    let out = opn(&["witness", "--m", "18446744073709551557"]);
    assert_eq!(out.status.code(), Some(3), "stderr: {}", stderr(&out));
}

#[test]
fn checkpoint_errors_exit_four() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.ckpt");
    std::fs::write(&path, "garbage\n").unwrap();
    let out = opn(&[
        "scan",
        "--limit",
        "1000",
        "--checkpoint",
        path.to_str().unwrap(),
        "--resume",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("corrupt"));

    // Existing checkpoint without --resume is also a checkpoint error.
    let out = opn(&[
        "scan",
        "--limit",
        "1000",
        "--checkpoint",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn resume_requires_checkpoint_path() {
    let out = opn(&["scan", "--limit", "1000", "--resume"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unwritable_output_exits_four() {
    let out = opn(&[
        "density-table",
        "--limit",
        "100",
        "--output",
        "/no/such/directory/out.csv",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn spoof_check_exit_codes_follow_verdicts() {
    let out = opn(&["spoof-check", "--descartes"]);
    assert_eq!(out.status.code(), Some(0));

    let out = opn(&["spoof-check", "--descartes", "--strict"]);
    assert_eq!(out.status.code(), Some(1));

    // sigma(5) * sigma(1) = 6 != 10.
    let out = opn(&["spoof-check", "--n", "1", "--q", "5", "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_solution_record_schema() {
    let out = opn(&["nonsolutions", "--limit", "100", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"m\":99,\"g1\":11,\"g2\":121,\"is_solution\":false}\n"
    );
}

#[test]
fn csv_density_schema() {
    let out = opn(&["density-table", "--limit", "1000", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "limit,count,percentage\n10,10,100\n100,99,99\n1000,974,97.4\n"
    );
}

#[test]
fn table_format_golden_bytes() {
    let out = opn(&["density-table", "--limit", "1000"]);
    assert_eq!(
        stdout(&out),
        " Upper limit         Count    Percentage\n\
         \x20         10            10          100%\n\
         \x20        100            99           99%\n\
         \x20       1000           974         97.4%\n"
    );

    let out = opn(&["scan", "--limit", "1000"]);
    assert_eq!(
        stdout(&out),
        "range [1, 1000]: 974 solutions, 26 non-solutions (97.4%)\n"
    );
}

#[test]
fn csv_round_trips_to_the_same_records() {
    let out = opn(&["nonsolutions", "--limit", "1000", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,g1,g2,is_solution"));
    let parsed: Vec<(u64, u128, u128, bool)> = lines
        .map(|line| {
            let mut cells = line.split(',');
            (
                cells.next().unwrap().parse().unwrap(),
                cells.next().unwrap().parse().unwrap(),
                cells.next().unwrap().parse().unwrap(),
                cells.next().unwrap().parse().unwrap(),
            )
        })
        .collect();
    assert_eq!(parsed.len(), 26);
    assert_eq!(parsed[0], (99, 11, 121, false));
    assert_eq!(parsed.last().unwrap().0, 990);
    // Re-parsing reproduces the in-memory records exactly.
    let table = opn_core::arith::SpfTable::build(1000).unwrap();
    for (m, g1, g2, is_solution) in parsed {
        let c = opn_core::scan::classify(m, &table).unwrap();
        assert_eq!((c.m, c.g1, c.g2, c.is_solution), (m, g1, g2, is_solution));
    }
}

#[test]
fn identical_configs_are_byte_identical_across_thread_counts() {
    let reference = opn(&[
        "scan",
        "--limit",
        "100000",
        "--threads",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(reference.status.code(), Some(0));
    for threads in ["2", "8"] {
        let out = opn(&[
            "scan",
            "--limit",
            "100000",
            "--threads",
            threads,
            "--format",
            "json",
        ]);
        assert_eq!(out.stdout, reference.stdout, "threads = {threads}");
    }
    // Same run twice: identical bytes.
    let again = opn(&[
        "scan",
        "--limit",
        "100000",
        "--threads",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(again.stdout, reference.stdout);
}

#[test]
fn thread_flag_beats_environment() {
    // An invalid environment value is an error only when consulted.
    let out = opn_env(
        &["density-table", "--limit", "100", "--threads", "1"],
        &[("OPN_THREADS", "not-a-number")],
    );
    assert_eq!(out.status.code(), Some(0), "flag wins over environment");

    let out = opn_env(
        &["density-table", "--limit", "100"],
        &[("OPN_THREADS", "not-a-number")],
    );
    assert_eq!(out.status.code(), Some(2));

    let out = opn_env(
        &["density-table", "--limit", "100"],
        &[("OPN_THREADS", "2")],
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_file_matches_stdout_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let piped = opn(&["density-table", "--limit", "1000", "--format", "csv"]);
    let to_file = opn(&[
        "density-table",
        "--limit",
        "1000",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), piped.stdout);
}

#[test]
fn checkpointed_scan_completes_and_cleans_up() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.ckpt");
    let out = opn(&[
        "scan",
        "--limit",
        "50000",
        "--segment-size",
        "8192",
        "--checkpoint",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(!Path::new(&path).exists(), "checkpoint removed on success");
    let plain = opn(&["scan", "--limit", "50000", "--format", "json"]);
    assert_eq!(out.stdout, plain.stdout);
}

#[test]
fn profile_random_is_seed_stable() {
    let a = opn(&[
        "profile", "--random", "25", "--seed", "7", "--format", "csv",
    ]);
    let b = opn(&[
        "profile", "--random", "25", "--seed", "7", "--format", "csv",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = opn(&[
        "profile", "--random", "25", "--seed", "8", "--format", "csv",
    ]);
    assert_ne!(a.stdout, c.stdout, "different seed, different stream");
}

#[test]
fn profile_rejects_invalid_triples() {
    let out = opn(&["profile", "--n", "4", "--i", "1", "--q", "5", "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("invalid triple"));
}

#[test]
fn witness_of_a_solution_is_an_empty_stream() {
    let out = opn(&["witness", "--m", "7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());

    let out = opn(&["witness", "--m", "7", "--format", "csv"]);
    assert_eq!(stdout(&out), "p,a,b\n");
}
