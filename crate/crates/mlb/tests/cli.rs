//! End-to-end checks of the command-line surface: the exit-code contract
//! over the fixture corpus, byte-stable reports, and bundle round-trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn mlb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mlb"))
        .args(args)
        .current_dir(fixtures())
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn exit_code_contract_over_the_fixture_corpus() {
    let cases: &[(&[&str], i32)] = &[
        (&["check-algebra", "a4.json"], 0),
        (&["check-algebra", "a2.json"], 0),
        (&["check-algebra", "abelian_3.json"], 0),
        (&["check-algebra", "a1_idempotent.json"], 1),
        (&["check-algebra", "a4_asymmetric.json"], 2),
        (&["check-rep", "a2_reps.json", "--rep", "rho_adjoint"], 0),
        (&["check-rep", "a2_reps.json", "--rep", "rho_bad"], 1),
        (&["check-rep", "a2_reps.json", "--rep", "missing"], 2),
        (&["check-prelie", "p2_prelie.json"], 0),
        (&["check-o-operator", "a4.json", "--T", "t_bad"], 1),
        (
            &["check-o-operator", "p2_sub_adjacent.json", "--rep", "theta", "--T", "id2"],
            0,
        ),
        (&["semidirect", "a2.json"], 0),
        (&["sub-adjacent", "p2_prelie.json"], 0),
        (&["cobracket", "a4.json", "--r", "r_e1e2"], 0),
        (&["check-bialgebra", "a4.json"], 0),
        (&["check-bialgebra", "a2_trivial_bialgebra.json"], 0),
        (&["check-bialgebra", "a2_bialgebra.json"], 0),
        (&["check-bialgebra", "a2_bad_cobracket.json"], 1),
        (&["check-bialgebra", "a2_bad_cobracket_jacobi.json"], 1),
        (&["check-bialgebra", "a2_bad_cobracket_skew.json"], 1),
        (&["check-matched-pair", "a4.json"], 0),
        (&["check-matched-pair", "a2_bad_cobracket.json"], 1),
        (&["bicrossed", "a4.json"], 0),
        (&["bicrossed", "a2_bad_cobracket.json"], 1),
        (&["check-manin", "a4.json"], 0),
        (&["check-manin", "a2_trivial_bialgebra.json"], 0),
        (&["check-manin", "a2_bad_cobracket.json"], 1),
        (&["double", "a4.json"], 0),
        (&["double", "a2_trivial_bialgebra.json"], 0),
        (&["double", "a2_bad_cobracket_skew.json"], 1),
        (&["ybe", "a4.json", "--r", "r_e1e2"], 1),
        (&["ybe", "a4.json", "--r", "r_e2e4"], 0),
        (&["ybe", "a4.json", "--r", "nope"], 2),
        (&["ybe-operator-form", "a4.json", "--r", "r_e2e4"], 0),
        (&["ybe-operator-form", "a4.json", "--r", "r_e1e2"], 1),
        (
            &["lift", "p2_sub_adjacent.json", "--rep", "theta", "--T", "id2"],
            0,
        ),
        (&["lift", "a4.json", "--T", "t_bad"], 1),
        (&["canonical-solution", "p2_prelie.json"], 0),
        (
            &["rota-baxter-corr", "a4.json", "--r", "r_e2e4", "--form", "omega_hyp"],
            0,
        ),
        (
            &["rota-baxter-corr", "a4.json", "--r", "r_e1e2", "--form", "omega_hyp"],
            0,
        ),
        (
            &["rota-baxter-corr", "a4.json", "--r", "r_e2e4", "--form", "omega_symp"],
            1,
        ),
        (&["check-form", "a4.json", "--form", "omega_hyp"], 0),
        (&["check-form", "a4.json", "--form", "omega_symp"], 0),
        (&["check-form", "abelian_2.json", "--form", "omega_std"], 0),
        (
            &["prelie-from-symplectic", "a4.json", "--form", "omega_symp"],
            0,
        ),
        (
            &["prelie-from-symplectic", "a4.json", "--form", "omega_hyp"],
            1,
        ),
        (
            &["prelie-from-symplectic", "abelian_2.json", "--form", "omega_std"],
            0,
        ),
        (&["frobnicate", "a4.json"], 2),
        (&["check-algebra", "no_such_file.json"], 2),
    ];
    for (args, expected) in cases {
        let out = mlb(args);
        assert_eq!(
            exit_code(&out),
            *expected,
            "args {:?}\nstdout: {}\nstderr: {}",
            args,
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn malformed_json_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = mlb(&["check-algebra", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
}

#[test]
fn unknown_sections_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("extra.json");
    std::fs::write(&path, r#"{"algebras": {}}"#).unwrap();
    let out = mlb(&["check-algebra", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for format in ["json", "text"] {
        let first = mlb(&["ybe", "a4.json", "--r", "r_e1e2", "--format", format]);
        let second = mlb(&["ybe", "a4.json", "--r", "r_e1e2", "--format", format]);
        assert_eq!(first.stdout, second.stdout);
        let built = mlb(&["double", "a4.json", "--format", format]);
        let built2 = mlb(&["double", "a4.json", "--format", format]);
        assert_eq!(built.stdout, built2.stdout);
    }
}

#[test]
fn rationals_render_exactly_never_as_decimals() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("frac.json");
    std::fs::write(
        &path,
        r#"{"algebra": {"frac": {"dim": 1, "products": [{"i": 1, "j": 1, "k": 1, "c": "3/2"}]}}}"#,
    )
    .unwrap();
    let out = mlb(&["check-algebra", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(exit_code(&out), 1);
    let stdout = String::from_utf8(out.stdout).unwrap();
    // jacobiator residual is 3·(3/2)² = 27/4
    assert!(stdout.contains("\"27/4\""), "got: {stdout}");
    assert!(!stdout.contains("6.75"));
}

fn extract_bundle(stdout: &[u8]) -> serde_json::Value {
    let report: serde_json::Value = serde_json::from_slice(stdout).expect("json report");
    report
        .get("bundle")
        .cloned()
        .expect("constructive command emits a bundle")
}

#[test]
fn constructed_bundles_reload_and_chain() {
    let dir = tempfile::tempdir().unwrap();

    // double emits an algebra, a canonical tensor and a cobracket; each
    // reloads and passes the checks that the construction promises
    let out = mlb(&["double", "a4.json", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let bundle = extract_bundle(&out.stdout);
    let path = dir.path().join("double.json");
    std::fs::write(&path, serde_json::to_string_pretty(&bundle).unwrap()).unwrap();
    let path = path.to_str().unwrap();
    assert_eq!(exit_code(&mlb(&["check-algebra", path])), 0);
    assert_eq!(exit_code(&mlb(&["check-bialgebra", path])), 0);
    assert_eq!(exit_code(&mlb(&["ybe", path, "--r", "canonical_r"])), 0);

    // re-emitting the reloaded double is byte-stable
    let again = mlb(&["double", "a4.json", "--format", "json"]);
    assert_eq!(extract_bundle(&again.stdout), bundle);

    // sub-adjacent output feeds check-rep directly
    let out = mlb(&["sub-adjacent", "p2_prelie.json", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let bundle = extract_bundle(&out.stdout);
    let path = dir.path().join("sub_adjacent.json");
    std::fs::write(&path, serde_json::to_string_pretty(&bundle).unwrap()).unwrap();
    let path = path.to_str().unwrap();
    assert_eq!(exit_code(&mlb(&["check-algebra", path])), 0);
    assert_eq!(exit_code(&mlb(&["check-rep", path, "--rep", "theta"])), 0);

    // lift output: the lifted tensor solves the equation in the lifted algebra
    let out = mlb(&[
        "lift",
        "p2_sub_adjacent.json",
        "--rep",
        "theta",
        "--T",
        "id2",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let bundle = extract_bundle(&out.stdout);
    let path = dir.path().join("lift.json");
    std::fs::write(&path, serde_json::to_string_pretty(&bundle).unwrap()).unwrap();
    let path = path.to_str().unwrap();
    assert_eq!(exit_code(&mlb(&["ybe", path, "--r", "lifted_r"])), 0);

    // prelie-from-symplectic output passes check-prelie
    let out = mlb(&[
        "prelie-from-symplectic",
        "a4.json",
        "--form",
        "omega_symp",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let bundle = extract_bundle(&out.stdout);
    let path = dir.path().join("prelie.json");
    std::fs::write(&path, serde_json::to_string_pretty(&bundle).unwrap()).unwrap();
    let path = path.to_str().unwrap();
    assert_eq!(exit_code(&mlb(&["check-prelie", path])), 0);
    // its canonical solution is again a Yang-Baxter solution
    assert_eq!(exit_code(&mlb(&["canonical-solution", path])), 0);
}

#[test]
fn verbose_lists_every_failing_site() {
    let out = mlb(&["check-algebra", "a1_idempotent.json", "--verbose"]);
    assert_eq!(exit_code(&out), 1);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("jacobi_failing_triples"), "got: {stdout}");

    // truncation marker appears without --verbose when several residual
    // coefficients are nonzero, and disappears with it
    let terse = mlb(&["lift", "a4.json", "--T", "t_bad"]);
    assert_eq!(exit_code(&terse), 1);
    assert!(String::from_utf8_lossy(&terse.stdout).contains("..."));
    let full = mlb(&["lift", "a4.json", "--T", "t_bad", "--verbose"]);
    let text = String::from_utf8(full.stdout).unwrap();
    let ybe_line = text
        .lines()
        .find(|l| l.starts_with("check yang_baxter"))
        .unwrap();
    assert!(!ybe_line.ends_with("..."));
}

#[test]
fn json_report_shape_is_stable() {
    let out = mlb(&["check-algebra", "a4.json", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["command"], "check-algebra");
    assert_eq!(report["verdict"], "pass");
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    assert_eq!(checks[0]["name"], "commutative");
    assert_eq!(checks[0]["flag"], true);
    assert_eq!(checks[1]["name"], "jacobi");

    let fail = mlb(&["check-algebra", "a1_idempotent.json", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_slice(&fail.stdout).unwrap();
    assert_eq!(report["verdict"], "fail");
    let jacobi = &report["checks"][1];
    assert_eq!(jacobi["flag"], false);
    assert_eq!(jacobi["witness"]["at"], serde_json::json!([1, 1, 1]));
    assert_eq!(
        jacobi["witness"]["residual"][0]["value"],
        serde_json::json!("3")
    );
}
