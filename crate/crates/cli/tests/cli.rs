//! End-to-end coverage of the CLI surface: report shapes, flag handling,
//! and the exit-code contract.

use std::path::PathBuf;
use std::process::Command;

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/corpus")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_hamlie"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn bracket_reports_the_sigma_relation() {
    let (stdout, _, code) = run(&[
        "bracket",
        "--input",
        &corpus("h_square_eps1.json"),
        "--input",
        &corpus("h_square_eps1bar.json"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"command\":\"bracket\",\"n\":1,\"result\":{\"n\":1,\"terms\":[{\"c\":\"4\",\"e\":[\"1\",\"1\"]}]}}\n"
    );
}

#[test]
fn product_works_on_bar_elements() {
    let (stdout, _, code) = run(&[
        "product",
        "--input",
        &corpus("bar_with_unit.json"),
        "--input",
        &corpus("bar_with_unit.json"),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"command\":\"product\""));
    // (5·t^0 + t^{ε_1})² = 25·t^0 + 10·t^{ε_1} + t^{2ε_1}
    assert!(stdout.contains("{\"c\":\"25\",\"e\":[\"0\",\"0\"]}"));
    assert!(stdout.contains("{\"c\":\"10\",\"e\":[\"1\",\"0\"]}"));
    assert!(stdout.contains("{\"c\":\"1\",\"e\":[\"2\",\"0\"]}"));
}

#[test]
fn cobracket_requires_a_skew_tensor() {
    let (_, stderr, code) = run(&[
        "cobracket",
        "--input",
        &corpus("t2_nonskew.json"),
        "--input",
        &corpus("h_eps1.json"),
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not skew"), "{stderr}");

    let (stdout, _, code) = run(&[
        "cobracket",
        "--input",
        &corpus("r_triangular.json"),
        "--input",
        &corpus("h_eps1.json"),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"command\":\"cobracket\""));
}

#[test]
fn cybe_exit_codes_track_vanishing() {
    let (stdout, _, code) = run(&["cybe", "--input", &corpus("r_triangular.json")]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"passed\":true"));

    let (stdout, _, code) = run(&["cybe", "--input", &corpus("r_squares.json")]);
    assert_eq!(code, 1);
    assert!(stdout.contains("\"passed\":false"));
    // Six ±4 coefficients.
    assert_eq!(stdout.matches("\"c\":\"4\"").count(), 3);
    assert_eq!(stdout.matches("\"c\":\"-4\"").count(), 3);
}

#[test]
fn check_bialgebra_passes_triangular_and_fails_squares() {
    let (stdout, _, code) = run(&[
        "check-bialgebra",
        "--input",
        &corpus("r_triangular.json"),
        "--samples",
        "20",
        "--seed",
        "5",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"seed\":5"));
    assert!(stdout.contains("\"samples\":20"));
    assert_eq!(stdout.matches("\"passed\":true").count(), 5); // 4 checks + overall

    let (stdout, _, code) = run(&[
        "check-bialgebra",
        "--input",
        &corpus("r_squares.json"),
        "--samples",
        "20",
    ]);
    assert_eq!(code, 1);
    // Anti-commutativity and compatibility still hold for skew r; co-Jacobi
    // and the Yang-Baxter check fail.
    assert!(stdout.contains("anti-commutativity: defect zero"));
    assert!(stdout.contains("co-Jacobi defect nonzero"));
    assert!(stdout.contains("c(r) != 0"));
}

#[test]
fn triangular_command_round_trips_through_cybe() {
    let (stdout, _, code) = run(&[
        "triangular",
        "--input",
        &corpus("h_sigma1.json"),
        "--input",
        &corpus("h_eps1bar.json"),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"passed\":true"));

    let (stdout, _, code) = run(&[
        "triangular",
        "--input",
        &corpus("h_sigma1.json"),
        "--input",
        &corpus("h_eps1.json"),
    ]);
    assert_eq!(code, 1);
    assert!(stdout.contains("\"defect\":{\"n\":1,\"terms\":[{\"c\":\"-2\",\"e\":[\"1\",\"0\"]}]}"));
}

#[test]
fn witness_finds_nothing_for_annihilated_input() {
    let (stdout, _, code) = run(&["witness", "--input", &corpus("t2_zero.json"), "--K", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"witness\":null"));

    let (stdout, _, code) = run(&["witness", "--input", &corpus("t3_cybe_squares.json"), "--K", "3"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("\"witness\":{"));
}

#[test]
fn lemma23_requires_p() {
    let (_, stderr, code) = run(&["lemma23", "--input", &corpus("t2_nonskew.json")]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--p"));

    let (stdout, _, code) = run(&[
        "lemma23",
        "--input",
        &corpus("t2_nonskew.json"),
        "--p",
        "1",
        "--K",
        "4",
    ]);
    assert_eq!(code, 1);
    assert!(stdout.contains("hypothesis not met"));
}

#[test]
fn skew_closure_accepts_skew_input() {
    let (stdout, _, code) = run(&[
        "skew-closure",
        "--input",
        &corpus("t2_skew_n2_sampled.json"),
        "--samples",
        "5",
    ]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("\"passed\":true"));
}

#[test]
fn ambient_consistency_is_enforced() {
    let (_, stderr, code) = run(&[
        "bracket",
        "--input",
        &corpus("h_eps1.json"),
        "--input",
        &corpus("h_n2_sampled.json"),
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("disagree"), "{stderr}");

    let (_, stderr, code) = run(&[
        "bracket",
        "--n",
        "3",
        "--input",
        &corpus("h_eps1.json"),
        "--input",
        &corpus("h_eps1bar.json"),
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--n 3"), "{stderr}");
}

#[test]
fn inline_and_input_are_mutually_exclusive() {
    let (_, stderr, code) = run(&[
        "cybe",
        "--input",
        &corpus("r_squares.json"),
        "--inline",
        "{}",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("either --input or --inline"), "{stderr}");
}

#[test]
fn output_flag_writes_the_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (stdout, _, code) = run(&[
        "cybe",
        "--input",
        &corpus("r_triangular.json"),
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("{\"command\":\"cybe\""));
    assert!(written.ends_with('\n'));
}

#[test]
fn unknown_command_is_a_usage_error() {
    let (_, _, code) = run(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn malformed_documents_report_locations() {
    let (_, stderr, code) = run(&[
        "bracket",
        "--inline",
        r#"{"n":1,"terms":[{"c":"0","e":["1","0"]}]}"#,
        "--inline",
        r#"{"n":1,"terms":[]}"#,
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("terms[0].c"), "{stderr}");
    assert!(stderr.contains("zero coefficient"), "{stderr}");
}
