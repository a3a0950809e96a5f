use std::process::Command;

use quadsys::cli::{run_from, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

fn quadsys(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_quadsys"))
        .args(args)
        .env_remove("QUADSYS_BUDGET_NODES")
        .env_remove("QUADSYS_BUDGET_SECS")
        .output()
        .expect("binary runs");
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

fn run(args: &[&str]) -> quadsys::cli::Outcome {
    run_from(std::iter::once("quadsys").chain(args.iter().copied()))
}

#[test]
fn verify_designs_pass() {
    let dir = tempfile::tempdir().unwrap();
    let s13 = dir.path().join("s13.txt");
    let s16 = dir.path().join("s16.txt");
    let (_, code) = quadsys(&["construct", "s13", "-o", s13.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    let (_, code) = quadsys(&["construct", "s16", "-o", s16.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    let (out, code) = quadsys(&["verify", s13.to_str().unwrap(), "linear", "steiner", "free:P3", "regular:4"]);
    assert_eq!(code, EXIT_PASS, "{out}");
    let (out, code) = quadsys(&["verify", s16.to_str().unwrap(), "free:S3plus", "free:P4", "--format", "kv"]);
    assert_eq!(code, EXIT_PASS, "{out}");
    assert!(out.contains("finding.0.status=pass"));
    assert!(out.ends_with("exit_code=0\n"));
}

#[test]
fn failed_claims_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nonlinear.txt");
    std::fs::write(&path, "4 6 2\n1 2 3 4\n1 2 5 6\n").unwrap();
    let (out, code) = quadsys(&["verify", path.to_str().unwrap(), "linear"]);
    assert_eq!(code, EXIT_FAIL, "{out}");
    assert!(out.contains("FAIL"));

    let s16 = dir.path().join("s16.txt");
    quadsys(&["construct", "s16", "-o", s16.to_str().unwrap()]);
    let (_, code) = quadsys(&["verify", s16.to_str().unwrap(), "free:P3"]);
    assert_eq!(code, EXIT_FAIL);
    let (_, code) = quadsys(&["verify", s16.to_str().unwrap(), "-F", "M2"]);
    assert_eq!(code, EXIT_FAIL);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "4 6 1\n1 2 3 x\n").unwrap();
    for args in [
        vec!["verify", bad.to_str().unwrap()],
        vec!["verify", "/definitely/not/here.txt"],
        vec!["frobnicate"],
        vec!["search", "ex", "-n", "8"],
        vec!["search", "ex", "-n", "8", "-F", "Q7"],
        vec!["bounds", "nothing", "-n", "5"],
        vec!["report", "th99"],
        vec!["construct", "g", "-n", "5", "-k", "3"],
        vec!["construct", "e4plus", "-n", "oops"],
        vec!["search", "packing", "-m", "30"],
    ] {
        let (_, code) = quadsys(&args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"]);
    assert_eq!(o.code, EXIT_PASS);
    assert!(o.stdout.contains("report"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["search", "ex", "-n", "9..11", "-F", "P3", "--format", "kv"][..],
        &["search", "packing", "-m", "4..12", "--jobs", "3"],
        &["report", "th12", "-n", "13..30", "--jobs", "4"],
        &["report", "th14", "-k", "3..5", "--seed", "9"],
        &["construct", "g", "-n", "40", "-k", "6", "--seed", "3"],
        &["bounds", "g", "-n", "40", "-k", "3", "--format", "kv"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a, b, "{args:?}");
        assert_eq!(a.code, EXIT_PASS, "{args:?}: {}{}", a.stdout, a.stderr);
    }
    // thread count does not change the result
    let one = run(&["report", "lem42", "--format", "kv"]);
    let four = run(&["report", "lem42", "--format", "kv", "--jobs", "4"]);
    assert_eq!(one, four);
}

#[test]
fn reports_pass() {
    for id in ["prop1", "prop2", "prop3", "th11", "th12", "th13", "th14", "lem41", "lem42"] {
        let o = run(&["report", id, "--jobs", "4"]);
        assert_eq!(o.code, EXIT_PASS, "{id}: {}{}", o.stdout, o.stderr);
    }
}

#[test]
fn bounds_print_both_forms() {
    let o = run(&["bounds", "g", "-n", "40", "-k", "3"]);
    assert!(o.stdout.contains("119/6"));
    let o = run(&["bounds", "g", "-n", "40", "-k", "3", "--format", "kv"]);
    assert!(o.stdout.contains("bound.0.lower=119/6"));
    let o = run(&["bounds", "packing", "-m", "4..19", "--format", "kv"]);
    assert!(o.stdout.contains("bound.15.exact=25"));
}

#[test]
fn search_writes_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    let o = run(&["search", "ex", "-n", "10", "-F", "P3", "-o", w.to_str().unwrap(), "--format", "kv"]);
    assert_eq!(o.code, EXIT_PASS);
    assert!(o.stdout.contains("result.0.value=5"));
    let h = quadsys::hypercore::format::parse(&std::fs::read_to_string(&w).unwrap()).unwrap();
    assert_eq!(h.edge_count(), 5);
    let (_, code) = quadsys(&["verify", w.to_str().unwrap(), "linear", "free:P3", "edges:5"]);
    assert_eq!(code, EXIT_PASS);
}

#[test]
fn budget_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_quadsys"))
        .args(["search", "ex", "-n", "12", "-F", "P4", "--format", "kv"])
        .env("QUADSYS_BUDGET_NODES", "5")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("result.0.completed=false"), "{text}");
    assert_eq!(out.status.code(), Some(EXIT_PASS));
}
