//! End-to-end tests of the `isomet` binary: command output, file round
//! trips, and the exit-code contract.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_isomet"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn workdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("isomet-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).expect("temp dir");
    dir
}

fn write_file(name: &str, contents: &str) -> PathBuf {
    let path = workdir().join(name);
    fs::write(&path, contents).expect("write test file");
    path
}

#[test]
fn gen_validate_test_embed_roundtrip() {
    let path = workdir().join("p3.json");
    let out = run(&[
        "gen",
        "--family",
        "path",
        "--n",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let out = run(&["validate", "--metric", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{\"valid\":true,\"n\":3}\n");

    let out = run(&["test-embed", "--metric", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"embeddable\":true"));
    assert!(text.contains("\"trace_profile\":[10,4,10]"));
    assert!(text.contains("\"witness\":null"));
}

#[test]
fn gen_output_parses_in_every_command() {
    let dir = workdir();
    for (name, args) in [
        ("snk63.json", vec!["--family", "snk", "--n", "6", "--k", "3"]),
        ("pyth.json", vec!["--family", "pythagorean-k4e", "--z", "48"]),
        ("c5.json", vec!["--family", "cycle", "--n", "5"]),
        (
            "rand.json",
            vec!["--family", "random-euclidean", "--n", "6", "--dim", "3", "--seed", "11"],
        ),
    ] {
        let path = dir.join(name);
        let mut gen_args = vec!["gen"];
        gen_args.extend(args);
        gen_args.extend(["--out", path.to_str().unwrap()]);
        assert!(run(&gen_args).status.success(), "{name} generation");
        for command in ["validate", "test-embed", "classify", "critgraph"] {
            let out = run(&[command, "--metric", path.to_str().unwrap()]);
            assert!(out.status.success(), "{command} on {name}");
        }
    }
}

#[test]
fn classify_reports_claw() {
    let path = workdir().join("claw.json");
    assert!(run(&["gen", "--family", "claw", "--out", path.to_str().unwrap()])
        .status
        .success());
    let out = run(&["classify", "--metric", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{\"class\":\"Claw\",\"embeddable\":false}\n");
}

#[test]
fn output_is_byte_identical_across_runs() {
    let path = workdir().join("snk.json");
    assert!(run(&[
        "gen",
        "--family",
        "snk",
        "--n",
        "6",
        "--k",
        "2",
        "--out",
        path.to_str().unwrap()
    ])
    .status
    .success());
    let first = run(&["test-embed", "--metric", path.to_str().unwrap()]);
    let second = run(&["test-embed", "--metric", path.to_str().unwrap()]);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn critgraph_json_and_dot() {
    let line = write_file(
        "line.json",
        r#"{"labels":["a","b","c","d"],"d":[[0,1,2,3],[1,0,1,2],[2,1,0,1],[3,2,1,0]]}"#,
    );
    let out = run(&["critgraph", "--metric", line.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"n\":4,\"edges\":[[0,1,1],[1,2,1],[2,3,1]]}\n"
    );

    let out = run(&["critgraph", "--metric", line.to_str().unwrap(), "--dot"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.contains("0 -- 1 [label=\"1\"];"));
    assert!(dot.contains("0 [label=\"a\"];"));
    assert!(!dot.contains("0 -- 3"));
}

#[test]
fn embed_respects_base_flag() {
    let path = workdir().join("p3e.json");
    assert!(run(&[
        "gen",
        "--family",
        "path",
        "--n",
        "3",
        "--out",
        path.to_str().unwrap()
    ])
    .status
    .success());
    let out = run(&["embed", "--metric", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"base\":0,\"rank\":1,\"coords\":[[0],[1],[2]],\"residual\":0}\n"
    );

    let out = run(&["embed", "--metric", path.to_str().unwrap(), "--base", "1"]);
    assert!(out.status.success());
    // the residual is rounding-level but not exactly zero at this base
    let text = stdout(&out);
    assert!(
        text.starts_with("{\"base\":1,\"rank\":1,\"coords\":[[1],[0],[-1]],\"residual\":"),
        "unexpected output {text}"
    );
}

#[test]
fn fiedler_and_ortho_agree_with_library_values() {
    let graph = write_file("p3g.json", r#"{"n":3,"edges":[[0,1,1],[1,2,1]]}"#);
    let target = write_file("k2.json", r#"{"labels":["a","b"],"d":[[0,1],[1,0]]}"#);
    let out = run(&[
        "fiedler",
        "--graph",
        graph.to_str().unwrap(),
        "--metric",
        target.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"value\":1.33333333333,\"argmin\":[0,0,1],\"classic_lambda2\":1,\"maps_searched\":6}\n"
    );

    let out = run(&[
        "ortho",
        "--graph",
        graph.to_str().unwrap(),
        "--metric",
        target.to_str().unwrap(),
        "--f1",
        "0,1,0",
        "--f2",
        "1,1,1",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{\"defect\":0}\n");
}

#[test]
fn verify_theorem_small() {
    let out = run(&["verify-theorem", "--max-n", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{\"counterexamples\":[]}\n");
    let progress = String::from_utf8(out.stderr).unwrap();
    assert!(progress.contains("n=4: 64 masks, 38 connected"));
    assert!(progress.contains("n=5: 1024 masks, 728 connected"));
}

#[test]
fn exit_codes() {
    // domain error: triangle violation, named on stderr, exit 1
    let bad = write_file("bad.json", r#"{"d":[[0,1,3],[1,0,1],[3,1,0]]}"#);
    let out = run(&["validate", "--metric", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("TriangleViolation"));

    // missing file, exit 1
    let out = run(&["validate", "--metric", "/nonexistent/x.json"]);
    assert_eq!(out.status.code(), Some(1));

    // usage errors, exit 2
    let out = run(&["validate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["gen", "--family", "snk", "--n", "6"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["gen", "--family", "unknown"]);
    assert_eq!(out.status.code(), Some(2));

    // budget guard is a domain error
    let out = run(&["verify-theorem", "--max-n", "9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("BudgetExceeded"));
}

#[test]
fn tol_flag_controls_strictness() {
    // a slightly bent triangle: valid under a loose tolerance, invalid
    // under the default
    let bent = write_file(
        "bent.json",
        r#"{"d":[[0,1,2.0000001],[1,0,1],[2.0000001,1,0]]}"#,
    );
    let out = run(&["validate", "--metric", bent.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["--tol", "1e-3", "validate", "--metric", bent.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}
