//! End-to-end tests of the command-line interface: arguments, output
//! shapes, file formats and exit codes (0 consistent, 1 usage/parse error,
//! 2 counterexample or verification failure).

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frattini"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn verify_normal_subgroup() {
    let output = run(&["verify", "--group", "S4", "--subgroup", "(1 2 3); (2 3 4)"]);
    let text = stdout(&output);
    assert_eq!(exit_code(&output), 0, "{text}");
    assert!(text.contains("condition_holds: true"));
    assert!(text.contains("is_normal: true"));
    assert!(text.contains("consistent: true"));
}

#[test]
fn verify_non_normal_subgroup_is_still_consistent() {
    let output = run(&["verify", "--group", "S3", "--subgroup", "(1 2)"]);
    let text = stdout(&output);
    assert_eq!(exit_code(&output), 0, "{text}");
    assert!(text.contains("condition_holds: false"));
    assert!(text.contains("is_normal: false"));
    assert!(text.contains("consistent: true"));
}

#[test]
fn verify_representative_mode() {
    let output = run(&[
        "verify",
        "--group",
        "S4",
        "--subgroup",
        "(1 2 3); (2 3 4)",
        "--representatives",
    ]);
    let text = stdout(&output);
    assert_eq!(exit_code(&output), 0, "{text}");
    assert!(text.contains("condition_holds: true"));
}

#[test]
fn verify_trivial_subgroup_is_vacuous() {
    let output = run(&["verify", "--group", "S3", "--subgroup", ""]);
    let text = stdout(&output);
    assert_eq!(exit_code(&output), 0, "{text}");
    assert!(text.contains("vacuously true"));
    assert!(text.contains("condition_holds: true"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(exit_code(&run(&["verify", "--group", "S3"])), 1);
    assert_eq!(exit_code(&run(&["no-such-command"])), 1);
    assert_eq!(
        exit_code(&run(&["verify", "--group", "S3", "--subgroup", "(1 9)"])),
        1
    );
    assert_eq!(
        exit_code(&run(&["verify", "--group", "nosuchfile.group", "--subgroup", ""])),
        1
    );
    // A generator outside the group is a caller mistake, not a counterexample.
    let output = run(&["verify", "--group", "A4", "--subgroup", "(1 2)"]);
    assert_eq!(exit_code(&output), 1);
}

#[test]
fn help_exits_zero() {
    assert_eq!(exit_code(&run(&["--help"])), 0);
}

#[test]
fn certify_and_check_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let cert_path = dir.path().join("cert.txt");
    let cert_arg = cert_path.to_str().unwrap();

    let output = run(&[
        "certify",
        "--group",
        "S4",
        "--subgroup",
        "(1 2 3); (2 3 4)",
        "--x",
        "(1 2)(3 4)",
        "--g",
        "(1 2 3 4)",
        "--out",
        cert_arg,
    ]);
    assert_eq!(exit_code(&output), 0, "{}", stdout(&output));

    let text = std::fs::read_to_string(&cert_path).unwrap();
    for field in [
        "degree:",
        "group_generators:",
        "subgroup_generators:",
        "x:",
        "g:",
        "word:",
        "decompositions:",
        "conjugated_letters:",
        "result:",
    ] {
        assert!(text.contains(field), "certificate misses {field}");
    }
    assert!(text.contains("result: (1 4)(2 3)"));

    let output = run(&[
        "check-cert",
        cert_arg,
        "--group",
        "S4",
        "--subgroup",
        "(1 2 3); (2 3 4)",
    ]);
    assert_eq!(exit_code(&output), 0, "{}", stdout(&output));
    assert!(stdout(&output).contains("ACCEPTED"));
}

#[test]
fn tampered_certificate_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let cert_path = dir.path().join("cert.txt");
    let cert_arg = cert_path.to_str().unwrap();
    let output = run(&[
        "certify", "--group", "S3", "--subgroup", "(1 2 3)",
        "--x", "(1 2 3)", "--g", "(1 2)", "--out", cert_arg,
    ]);
    assert_eq!(exit_code(&output), 0, "{}", stdout(&output));

    let tampered = std::fs::read_to_string(&cert_path)
        .unwrap()
        .replace("result: (1 3 2)", "result: (1 2 3)");
    std::fs::write(&cert_path, tampered).unwrap();

    let output = run(&["check-cert", cert_arg, "--group", "S3", "--subgroup", "(1 2 3)"]);
    assert_eq!(exit_code(&output), 2, "{}", stdout(&output));
    assert!(stdout(&output).contains("REJECTED"));
}

#[test]
fn certify_refuses_unsatisfiable_requests() {
    // K = ⟨(1 2)⟩ in S3 fails the coverage condition: no certificate exists.
    let output = run(&[
        "certify", "--group", "S3", "--subgroup", "(1 2)",
        "--x", "(1 2)", "--g", "(1 2 3)",
    ]);
    assert_eq!(exit_code(&output), 1);
}

#[test]
fn sylow_listing() {
    let output = run(&["sylow", "--group", "A4", "--subgroup", "(1 2 3); (2 3 4)"]);
    let text = stdout(&output);
    assert_eq!(exit_code(&output), 0, "{text}");
    assert!(text.contains("p = 2: order 4, count 1"));
    assert!(text.contains("p = 3: order 3, count 4"));

    let output = run(&[
        "sylow", "--group", "A4", "--subgroup", "(1 2 3); (2 3 4)", "--prime", "3",
    ]);
    let text = stdout(&output);
    assert!(text.contains("p = 3") && !text.contains("p = 2"));

    let output = run(&[
        "sylow", "--group", "A4", "--subgroup", "(1 2 3); (2 3 4)", "--prime", "5",
    ]);
    assert_eq!(exit_code(&output), 1);
}

#[test]
fn normalizer_listing() {
    let output = run(&["normalizer", "--group", "S4", "--subgroup", "(1 2 3)"]);
    let text = stdout(&output);
    assert_eq!(exit_code(&output), 0, "{text}");
    assert!(text.contains("order 6"));
}

#[test]
fn sweep_small_catalog() {
    let output = run(&["sweep", "--max-order", "12"]);
    let text = stdout(&output);
    assert_eq!(exit_code(&output), 0, "{text}");
    assert!(text.contains("inconsistencies=0"));
    assert!(text.contains("runtime:"));
}

#[test]
fn sweep_is_deterministic_across_threads() {
    let strip_runtime = |s: String| {
        s.lines()
            .filter(|l| !l.starts_with("runtime:"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let single = strip_runtime(stdout(&run(&["sweep", "--max-order", "24"])));
    let multi = strip_runtime(stdout(&run(&["sweep", "--max-order", "24", "--threads", "4"])));
    assert_eq!(single, multi);
    assert!(single.contains("subgroups=353"));
}

#[test]
fn group_files_work_from_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.group");
    std::fs::write(&path, "# symmetric group on three points\ndegree 3\n(1 2 3)\n(1 2)\n").unwrap();
    let output = run(&[
        "verify",
        "--group",
        path.to_str().unwrap(),
        "--subgroup",
        "(1 2 3)",
    ]);
    let text = stdout(&output);
    assert_eq!(exit_code(&output), 0, "{text}");
    assert!(text.contains("order 6"));
    assert!(text.contains("is_normal: true"));

    let bad = dir.path().join("bad.group");
    std::fs::write(&bad, "degree 4\n(1 9)\n").unwrap();
    let output = run(&["verify", "--group", bad.to_str().unwrap(), "--subgroup", ""]);
    assert_eq!(exit_code(&output), 1);
    assert!(String::from_utf8_lossy(&output.stderr).contains("line 2"));
}

#[test]
fn direct_product_specs_parse() {
    let output = run(&["verify", "--group", "S3xC2", "--subgroup", "(1 2 3)"]);
    let text = stdout(&output);
    assert_eq!(exit_code(&output), 0, "{text}");
    assert!(text.contains("order 12"));
}
