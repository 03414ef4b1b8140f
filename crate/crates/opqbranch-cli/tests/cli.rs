use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opqbranch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> Vec<u8> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read(&path).expect("golden file readable")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn golden_branch_mult() {
    let out = run(&[
        "branch", "mult", "--p", "3", "--q", "2", "--big-sign", "+", "--lambda", "5/2",
        "--small-sign", "+", "--mu", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, golden("branch_mult.json"));
    assert!(out.stderr.is_empty());
}

#[test]
fn golden_branch_spectrum() {
    let out = run(&[
        "branch", "spectrum", "--p", "3", "--q", "2", "--sign", "+", "--lambda", "5/2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, golden("branch_spectrum.json"));
    assert!(out.stderr.is_empty());
}

#[test]
fn golden_rep_info_parity_error() {
    let out = run(&["rep", "info", "--p", "3", "--q", "2", "--sign", "+", "--lambda", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(out.stderr, golden("rep_info_parity.stderr"));
    assert!(out.stdout.is_empty());
}

#[test]
fn golden_sweep_versions() {
    let out = run(&[
        "sweep", "versions", "--p-range", "3..4", "--q-range", "2..3", "--lambda-max", "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, golden("sweep_versions.json"));
    assert!(out.stderr.is_empty());
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = [
        "sweep", "versions", "--p-range", "3..4", "--q-range", "2..3", "--lambda-max", "6",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn unparseable_parameter_exits_two() {
    let out = run(&["rep", "info", "--p", "3", "--q", "2", "--sign", "+", "--lambda", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--lambda"), "stderr names the flag: {err}");
}

#[test]
fn packet_window_violation_exits_two() {
    let out = run(&["packet", "verify", "--p", "3", "--q", "1", "--lambda", "5/2", "--mu", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--p/--q"), "stderr names the flags: {err}");
}

#[test]
fn zero_rep_info_reports_null_invariants() {
    let out = run(&["rep", "info", "--p", "1", "--q", "2", "--sign", "+", "--lambda", "5/2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["zero"], serde_json::Value::Bool(true));
    assert!(v["inf_char"].is_null());
    assert!(v["min_k_type"].is_null());
}

#[test]
fn spectrum_prefix_length_is_configurable() {
    let out = run(&[
        "branch", "spectrum", "--p", "3", "--q", "2", "--sign", "-", "--lambda", "5/2",
        "--max-entries", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);
    assert_eq!(v["truncated"], serde_json::Value::Bool(true));
}

#[test]
fn ochar_filter_selects_the_witnessed_character() {
    let base = [
        "branch", "mult", "--p", "3", "--q", "2", "--big-sign", "+", "--lambda", "5/2",
        "--small-sign", "+", "--mu", "1",
    ];
    let mut with_sgn = base.to_vec();
    with_sgn.extend(["--ochar", "sgn"]);
    let out = run(&with_sgn);
    assert_eq!(stdout_json(&out)["multiplicity"], serde_json::json!(1));

    let mut with_trivial = base.to_vec();
    with_trivial.extend(["--ochar", "trivial"]);
    let out = run(&with_trivial);
    assert_eq!(stdout_json(&out)["multiplicity"], serde_json::json!(0));
}

#[test]
fn broken_pipe_exits_quietly() {
    use std::io::Read;
    use std::process::Stdio;
    // Enough entries to overflow the pipe buffer after the reader is gone.
    let mut child = Command::new(env!("CARGO_BIN_EXE_opqbranch"))
        .args([
            "branch", "spectrum", "--p", "3", "--q", "2", "--sign", "-", "--lambda", "5/2",
            "--max-entries", "20000",
        ])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    drop(child.stdout.take());
    let mut err = String::new();
    child
        .stderr
        .take()
        .expect("stderr piped")
        .read_to_string(&mut err)
        .expect("stderr readable");
    let status = child.wait().expect("child exits");
    assert_eq!(status.code(), Some(141));
    assert!(err.is_empty(), "no panic output expected, got: {err}");
}

#[test]
fn table_output_is_plain_text() {
    let out = run(&[
        "branch", "mult", "--p", "3", "--q", "2", "--big-sign", "+", "--lambda", "5/2",
        "--small-sign", "+", "--mu", "2", "--output", "table",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "multiplicity  1\n");
}
