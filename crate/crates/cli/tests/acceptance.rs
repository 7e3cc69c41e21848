//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with --nocapture). Criteria 1-9 run the seeded property suites
//! from the library; criterion 10 exercises the CLI contract against golden
//! files, including all three documented non-zero exit codes and
//! byte-identical determinism.

use lorentz_reflections::checks::{self, CheckOutcome};
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

const ACCEPTANCE_SEED: u64 = 42;

fn report(number: u8, outcome: &CheckOutcome) {
    let status = if outcome.passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {:02} {}: {} ({} trials)",
        number, outcome.name, status, outcome.trials
    );
    for c in &outcome.subchecks {
        println!(
            "    {} {}: {:.3e} (tolerance {:.1e})",
            if c.passed { "ok " } else { "BAD" },
            c.label,
            c.residual,
            c.tolerance
        );
    }
    assert!(
        outcome.passed,
        "criterion {number} ({}) failed: {:?}",
        outcome.name, outcome.subchecks
    );
}

#[test]
fn criterion_01_reflection_axioms() {
    report(1, &checks::reflection_axioms(ACCEPTANCE_SEED));
}

#[test]
fn criterion_02_boost_linking() {
    report(2, &checks::boost_linking_correctness(ACCEPTANCE_SEED));
}

#[test]
fn criterion_03_velocity_formula() {
    report(3, &checks::velocity_formula(ACCEPTANCE_SEED));
}

#[test]
fn criterion_04_exceptional_lightlike() {
    report(4, &checks::exceptional_lightlike(ACCEPTANCE_SEED));
}

#[test]
fn criterion_05_thomas_rotation() {
    report(5, &checks::thomas_rotation_properties(ACCEPTANCE_SEED));
}

#[test]
fn criterion_06_polar_decomposition() {
    report(6, &checks::polar_decomposition_suite(ACCEPTANCE_SEED));
}

#[test]
fn criterion_07_positivity_identity() {
    report(7, &checks::positivity_identity(ACCEPTANCE_SEED));
}

#[test]
fn criterion_08_parity_classification() {
    report(8, &checks::parity_classification(ACCEPTANCE_SEED));
}

#[test]
fn criterion_09_factorization_round_trip() {
    report(9, &checks::factorization_round_trip(ACCEPTANCE_SEED));
}

// --- Criterion 10: CLI contract -----------------------------------------

struct CliCase {
    golden: &'static str,
    args: &'static [&'static str],
    stdin: &'static str,
    exit: i32,
}

const CLI_CASES: &[CliCase] = &[
    CliCase {
        golden: "reflect_time_normal",
        args: &["reflect"],
        stdin: r#"{"normal": [1, 0, 0, 0], "vector": [5, 1, 2, 3]}"#,
        exit: 0,
    },
    CliCase {
        golden: "reflect_line_spatial",
        args: &["reflect"],
        stdin: r#"{"normal": [0, 1, 0, 0], "line": true, "vector": [1, 0, 0, 0]}"#,
        exit: 0,
    },
    CliCase {
        golden: "boost_link_canonical",
        args: &["boost-link"],
        stdin: r#"{"x": [1, 0, 0, 0], "x_prime": [1.25, 0.75, 0, 0]}"#,
        exit: 0,
    },
    CliCase {
        golden: "boost_link_boosted_observer",
        args: &["boost-link", "--observer", "[1.25,0.75,0,0]"],
        stdin: r#"{"x": [2, 0, 0, 0], "x_prime": [2.2912878474779199, 1, 0.5, 0]}"#,
        exit: 0,
    },
    CliCase {
        golden: "boost_link_no_solution",
        args: &["boost-link"],
        stdin: r#"{"x": [1, 1, 0, 0], "x_prime": [1, -1, 0, 0]}"#,
        exit: 3,
    },
    CliCase {
        golden: "boost_link_spacelike_input",
        args: &["boost-link"],
        stdin: r#"{"x": [0, 1, 0, 0], "x_prime": [0, 0, 1, 0]}"#,
        exit: 2,
    },
    CliCase {
        golden: "velocity_canonical",
        args: &["velocity"],
        stdin: r#"{"x": [1, 0, 0, 0], "x_prime": [1.25, 0.75, 0, 0]}"#,
        exit: 0,
    },
    CliCase {
        golden: "thomas_perpendicular",
        args: &["thomas"],
        stdin: r#"{"u": [1, 0, 0, 0], "u_prime": [1.25, 0.75, 0, 0], "u_double_prime": [1.5625, 0.9375, 0.75, 0]}"#,
        exit: 0,
    },
    CliCase {
        golden: "polar_pure_boost",
        args: &["polar"],
        stdin: r#"{"transform": [[1.25, 0.75, 0, 0], [0.75, 1.25, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}"#,
        exit: 0,
    },
    CliCase {
        golden: "polar_right_order",
        args: &["polar", "--right-polar"],
        stdin: r#"{"transform": [[1.25, 0.75, 0, 0], [0.75, 1.25, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}"#,
        exit: 0,
    },
    CliCase {
        golden: "polar_antichronous_rejected",
        args: &["polar"],
        stdin: r#"{"transform": [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}"#,
        exit: 2,
    },
    CliCase {
        golden: "factor_pure_boost",
        args: &["factor"],
        stdin: r#"{"transform": [[1.25, 0.75, 0, 0], [0.75, 1.25, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}"#,
        exit: 0,
    },
    CliCase {
        golden: "factor_time_reversal",
        args: &["factor"],
        stdin: r#"{"transform": [[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}"#,
        exit: 0,
    },
    CliCase {
        golden: "classify_identity",
        args: &["classify"],
        stdin: r#"{"transform": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}"#,
        exit: 0,
    },
    CliCase {
        golden: "classify_not_lorentz",
        args: &["classify"],
        stdin: r#"{"transform": [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]]}"#,
        exit: 4,
    },
    CliCase {
        golden: "malformed_json",
        args: &["classify"],
        stdin: r#"{"transform": [[1, 0"#,
        exit: 2,
    },
];

fn run_cli(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_loref"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("stdin write");
    child.wait_with_output().expect("binary runs")
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"))
}

#[test]
fn criterion_10_cli_contract() {
    let mut covered_exits = std::collections::BTreeSet::new();
    for case in CLI_CASES {
        let first = run_cli(case.args, case.stdin);
        let second = run_cli(case.args, case.stdin);
        let code = first.status.code().expect("no signal");
        assert_eq!(
            code,
            case.exit,
            "{}: exit code (stderr: {})",
            case.golden,
            String::from_utf8_lossy(&first.stderr)
        );
        covered_exits.insert(code);
        // Deterministic byte-identical output.
        assert_eq!(
            first.stdout, second.stdout,
            "{}: output differs between runs",
            case.golden
        );
        // No stack traces on any input.
        let stderr = String::from_utf8_lossy(&first.stderr);
        assert!(!stderr.contains("panicked"), "{}: {stderr}", case.golden);

        let golden = std::fs::read(golden_path(case.golden))
            .unwrap_or_else(|e| panic!("{}: missing golden file ({e})", case.golden));
        assert_eq!(
            first.stdout,
            golden,
            "{}: stdout does not match golden file\n got: {}",
            case.golden,
            String::from_utf8_lossy(&first.stdout)
        );
        println!("criterion 10 cli case {}: PASS (exit {})", case.golden, code);
    }
    assert!(
        covered_exits.contains(&0)
            && covered_exits.contains(&2)
            && covered_exits.contains(&3)
            && covered_exits.contains(&4),
        "all documented exit codes exercised, got {covered_exits:?}"
    );
}

#[test]
fn criterion_10_check_subcommand_deterministic() {
    let args = &["check", "--seed", "42"];
    let first = run_cli(args, "");
    let second = run_cli(args, "");
    assert_eq!(first.status.code(), Some(0), "check must pass at seed 42");
    assert_eq!(first.stdout, second.stdout, "check output must be byte-identical");
    let golden = std::fs::read(golden_path("check_seed42")).expect("golden file");
    assert_eq!(first.stdout, golden, "check output matches golden file");
    println!("criterion 10 cli case check_seed42: PASS (deterministic, all suites green)");
}

#[test]
fn cli_reads_input_from_file() {
    let dir = std::env::temp_dir();
    let path = dir.join("loref_acceptance_input.json");
    std::fs::write(&path, r#"{"x": [1, 0, 0, 0], "x_prime": [1.25, 0.75, 0, 0]}"#).unwrap();
    let out = run_cli(&["velocity", "--in", path.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(0));
    let piped = run_cli(&["velocity"], r#"{"x": [1, 0, 0, 0], "x_prime": [1.25, 0.75, 0, 0]}"#);
    assert_eq!(out.stdout, piped.stdout, "--in and stdin agree");
}

#[test]
fn cli_tol_flag_controls_null_rejection() {
    // eta(x,x) ~ -2e-3 relative to the Euclidean norm: comfortably timelike
    // under the default tolerance, rejected as lightlike once the caller
    // loosens --tol past that ratio.
    let doc = r#"{"normal": [1.001, 1, 0, 0]}"#;
    let strict = run_cli(&["reflect"], doc);
    assert_eq!(
        strict.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&strict.stderr)
    );
    let loose = run_cli(&["reflect", "--tol", "1e-2"], doc);
    assert_eq!(loose.status.code(), Some(2));
    let body = String::from_utf8_lossy(&loose.stdout);
    assert!(body.contains("null_normal"), "{body}");
}

#[test]
fn cli_near_null_normal_fails_validation_not_panic() {
    // Close enough to the light cone that the tensor cannot meet the
    // validation tolerance: a clean exit 4, never a stack trace.
    let out = run_cli(&["reflect"], r#"{"normal": [1.0000005, 1, 0, 0]}"#);
    assert_eq!(out.status.code(), Some(4));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(!stderr.contains("panicked"), "{stderr}");
    let body = String::from_utf8_lossy(&out.stdout);
    assert!(body.contains("validation_failure"), "{body}");
}
