use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.quiver"))
}

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_auslander")).args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

fn run_on(name: &str, args: &[&str]) -> (String, i32) {
    let path = fixture(name);
    let mut all = vec![path.to_str().unwrap()];
    all.extend_from_slice(args);
    run(&all)
}

fn json(name: &str, args: &[&str]) -> (serde_json::Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let (out, code) = run_on(name, &all);
    (serde_json::from_str(&out).unwrap(), code)
}

#[test]
fn golden_a2_sequence() {
    let (out, code) = run_on("a2", &["ass", "-m", "S1", "--verify"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("0 -> S2 -> P1 -> S1 -> 0\n"), "{out}");
    assert!(out.contains("minimal: true"));
}

#[test]
fn tau_json_envelope() {
    let (v, code) = json("a2", &["tau", "-m", "S1"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "tau");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["window_unsafe"], false);
    assert_eq!(v["result"]["iso_to"], "S2");
    assert_eq!(v["result"]["tau"]["dims"], serde_json::json!([0, 1]));
}

#[test]
fn json_output_is_byte_stable() {
    let a = run_on("kronecker", &["--json", "duality-check", "-m", "R0"]);
    let b = run_on("kronecker", &["--json", "duality-check", "-m", "R0"]);
    assert_eq!(a, b);
    assert_eq!(a.1, 0);
}

#[test]
fn window_reports_are_stamped() {
    let (v, code) = json("window_unbounded", &["tau", "-m", "Sb1"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "window-unsafe");
    assert_eq!(v["window_unsafe"], true);
    let (v, code) = json("window_multiserial", &["tau", "-m", "S0"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["window_unsafe"], false);
}

#[test]
fn non_semiperfect_refuses_tau() {
    let (v, code) = json("loop_idempotent", &["tau", "-m", "S"]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "error");
}

#[test]
fn missing_file_and_bad_args_exit_one() {
    assert_eq!(run(&["/nonexistent.quiver", "build"]).1, 1);
    assert_eq!(run_on("a2", &["tau"]).1, 1);
    assert_eq!(run_on("a2", &["tau", "-m", "nope"]).1, 1);
    assert_eq!(run(&["--help"]).1, 0);
}

#[test]
fn dualize_lands_over_the_opposite() {
    let (out, code) = run_on("dual_numbers", &["dualize", "-m", "S"]);
    assert_eq!(code, 0);
    assert!(out.contains("module DS { dim x = 1; }"), "{out}");
}

#[test]
fn every_fixture_builds() {
    for f in auslander::corpus::FIXTURES {
        let (v, code) = json(f.name, &["build"]);
        assert!(code == 0 || code == 2, "{}: {v}", f.name);
        assert_eq!(v["command"], "build");
    }
}
