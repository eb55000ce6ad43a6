//! End-to-end CLI tests: golden outputs for every fixture, exit codes, and
//! byte-stable determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubulate"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {:?}", out);
    String::from_utf8(out.stdout).unwrap()
}

const FIXTURES: [&str; 4] = ["pt", "two", "p3", "hex6"];

#[test]
fn golden_graph_json() {
    for f in FIXTURES {
        let input = fixture(&format!("{f}.json"));
        assert_eq!(
            stdout_of(&["cubulate", &input, "--format", "json"]),
            golden(&format!("{f}.graph.json")),
            "{f}"
        );
    }
}

#[test]
fn golden_graph_dot() {
    for f in FIXTURES {
        let input = fixture(&format!("{f}.json"));
        assert_eq!(
            stdout_of(&["cubulate", &input, "--format", "dot"]),
            golden(&format!("{f}.graph.dot")),
            "{f}"
        );
    }
}

#[test]
fn golden_complex_json() {
    for f in FIXTURES {
        let input = fixture(&format!("{f}.json"));
        assert_eq!(
            stdout_of(&["cubes", &input, "--format", "json"]),
            golden(&format!("{f}.complex.json")),
            "{f}"
        );
    }
}

#[test]
fn golden_verify_json() {
    for f in FIXTURES {
        let input = fixture(&format!("{f}.json"));
        assert_eq!(
            stdout_of(&["verify", &input, "--format", "json"]),
            golden(&format!("{f}.verify.json")),
            "{f}"
        );
    }
}

#[test]
fn golden_hex6_off_and_action() {
    assert_eq!(
        stdout_of(&["cubes", &fixture("hex6.json"), "--format", "off"]),
        golden("hex6.squares.off")
    );
    assert_eq!(
        stdout_of(&[
            "act",
            &fixture("hex6.json"),
            &fixture("hex6_action.json"),
            "--format",
            "json"
        ]),
        golden("hex6.act.json")
    );
}

#[test]
fn validate_is_canonicalizing() {
    // Fixture files are already canonical; validate must reproduce them.
    for f in FIXTURES {
        let input = fixture(&format!("{f}.json"));
        let expected = std::fs::read_to_string(&input).unwrap();
        assert_eq!(stdout_of(&["validate", &input]), expected, "{f}");
    }
}

#[test]
fn dist_p3() {
    assert_eq!(stdout_of(&["dist", &fixture("p3.json"), "a", "c"]), "2\n");
}

#[test]
fn path_and_median() {
    assert_eq!(
        stdout_of(&["path", &fixture("p3.json"), "a", "c"]),
        "σ_a\nσ_b\nσ_c\n"
    );
    assert_eq!(
        stdout_of(&["median", &fixture("hex6.json"), "0", "2", "4"]),
        "0001\n"
    );
}

#[test]
fn verify_failure_exits_1_with_report() {
    let out = run(&["verify", &fixture("c6_graph.json")]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("median_graph"));
    assert!(text.contains("FAIL"));
    assert!(text.contains("counterexample"));
}

#[test]
fn roundtrip_on_median_graph_passes() {
    let out = run(&["roundtrip", &fixture("q3_graph.json")]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn input_errors_exit_2() {
    let out = run(&["cubulate", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["dist", &fixture("p3.json"), "a", "zzz"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("zzz"));
}

#[test]
fn seeded_verification_is_deterministic() {
    let args = [
        "verify",
        &fixture("p3.json"),
        "--seed",
        "7",
        "--random",
        "5",
        "--format",
        "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    assert!(text.contains("random[4].median_graph"));
}
