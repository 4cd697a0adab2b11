//! End-to-end tests of the binary: output determinism, text round-trips and
//! exit codes.

use std::process::{Command, Output};

fn thompson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thompson"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn v_subcommands_match_expected_output() {
    let out = thompson(&["v", "compose", "00->0 01->10 1->11", "0->1 1->0"]);
    assert_eq!(stdout(&out).trim(), "0->11 10->0 11->10");
    assert_eq!(out.status.code(), Some(0));

    let out = thompson(&["v", "slope", "00->0 01->10 1->11", "--at", "(0)"]);
    assert_eq!(stdout(&out).trim(), "+1");

    let out = thompson(&["v", "slope", "00->0 01->10 1->11", "--at", "(1)"]);
    assert_eq!(stdout(&out).trim(), "-1");

    let out = thompson(&["v", "reduce", "0->0 10->10 11->11"]);
    assert_eq!(stdout(&out).trim(), "e->e");

    let out = thompson(&["v", "member", "00->0 01->10 1->11"]);
    assert_eq!(stdout(&out).trim(), "F");
    let out = thompson(&["v", "member", "0->1 1->0"]);
    assert_eq!(stdout(&out).trim(), "T");
    let out = thompson(&["v", "member", "00->1 01->01 1->00"]);
    assert_eq!(stdout(&out).trim(), "V");
}

#[test]
fn printed_tables_reparse_to_equal_values() {
    for table in [
        "00->0 01->10 1->11",
        "0->1 1->0",
        "000->11 001->101 01->100 10->00 11->01",
    ] {
        let once = stdout(&thompson(&["v", "reduce", table]));
        let twice = stdout(&thompson(&["v", "reduce", once.trim()]));
        assert_eq!(once, twice);
    }
    // canonical points round-trip through apply with the identity
    for point in ["(0)", "01.(10)", "11.(10)"] {
        let out = stdout(&thompson(&["v", "apply", "e->e", "--at", point]));
        assert_eq!(out.trim(), point);
    }
    // non-canonical spellings canonicalise on parse, idempotently
    let once = stdout(&thompson(&["v", "apply", "e->e", "--at", "111.(01)"]));
    assert_eq!(once.trim(), "11.(10)");
}

#[test]
fn malformed_tables_exit_2_with_diagnostics() {
    let out = thompson(&["v", "reduce", "0->0 01->1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("0"), "diagnostic should name the cells: {err}");

    let out = thompson(&["v", "reduce", "0->0 1->02"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_is_deterministic_and_exit_coded() {
    for (suite, iters) in [("cocf", "40"), ("gamma-phi", "5"), ("zeta-example", "20")] {
        let run = || thompson(&["check", "--suite", suite, "--seed", "7", "--iters", iters]);
        let a = run();
        let b = run();
        assert_eq!(
            stdout(&a),
            stdout(&b),
            "{suite} stdout must be byte-identical"
        );
        assert_eq!(a.status.code(), Some(0), "{suite} should pass");
    }

    let out = thompson(&["check", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));

    let out = thompson(&["check", "--list"]);
    assert!(stdout(&out).contains("zeta-example"));
}

#[test]
fn check_reads_triple_files() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let path = format!("{dir}/../../fixtures/z3inv.json");
    let out = thompson(&[
        "check",
        "--suite",
        "group-axioms",
        "--iters",
        "25",
        "--triple",
        &path,
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("\"failures\": []"));
}

#[test]
fn classify_verdicts() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let fx = |n: &str| format!("{dir}/../../fixtures/{n}.json");

    let out = thompson(&[
        "classify",
        "--left",
        &fx("z3inv"),
        "--right",
        &fx("z3inv"),
        "--mode",
        "prop24",
    ]);
    let text = stdout(&out);
    assert!(text.contains("WitnessFound") && text.contains("\"sigma\": \"id\""));

    let out = thompson(&[
        "classify",
        "--left",
        &fx("s3inner"),
        "--right",
        &fx("s3"),
        "--mode",
        "cor28",
    ]);
    assert!(stdout(&out).contains("Isomorphic"));
    assert_eq!(out.status.code(), Some(0));

    let out = thompson(&[
        "classify",
        "--left",
        &fx("z5x2"),
        "--right",
        &fx("z5x3"),
        "--mode",
        "cocf",
    ]);
    assert!(stdout(&out).contains("Holds"));
}

#[test]
fn enumeration_bound_respects_env_override() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let fx = |n: &str| format!("{dir}/../../fixtures/{n}.json");
    let out = Command::new(env!("CARGO_BIN_EXE_thompson"))
        .args([
            "classify",
            "--left",
            &fx("s3"),
            "--right",
            &fx("s3"),
            "--mode",
            "cor28",
        ])
        .env("THOMPSON_MAX_GROUP", "4")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound"));
}
