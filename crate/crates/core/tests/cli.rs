use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn jobs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/jobs")
}

fn run(args: &[&str]) -> (Output, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_elimination"))
        .args(args)
        .output()
        .expect("binary runs");
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out, report)
}

fn run_job(job: &Value, extra: &[&str]) -> (i32, Value) {
    let dir = tempdir();
    let path = dir.join("job.json");
    std::fs::write(&path, job.to_string()).unwrap();
    let mut args = vec!["--job", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    let (out, report) = run(&args);
    (out.status.code().unwrap(), report)
}

fn tempdir() -> PathBuf {
    use std::sync::atomic::{AtomicUsize, Ordering};
    static NEXT: AtomicUsize = AtomicUsize::new(0);
    let dir = std::env::temp_dir().join(format!(
        "elimination-cli-{}-{}",
        std::process::id(),
        NEXT.fetch_add(1, Ordering::Relaxed)
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn sample_jobs_succeed() {
    for name in [
        "resultant.json",
        "resultant_ternary.json",
        "intersection.json",
        "intersection_product.json",
        "norm.json",
        "cube_verify.json",
    ] {
        let path = jobs_dir().join(name);
        let (out, report) = run(&["--job", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}: {report}");
        assert_eq!(report["status"], "ok", "{name}");
    }
}

#[test]
fn resultant_example_values() {
    let path = jobs_dir().join("resultant.json");
    let (_, report) = run(&["--job", path.to_str().unwrap()]);
    assert_eq!(report["result"]["value"]["value"], "-2");
    assert_eq!(report["result"]["method"], "macaulay");

    let (_, report) = run(&["--job", path.to_str().unwrap(), "--mode", "poisson"]);
    assert_eq!(report["result"]["value"]["value"], "-2");
    assert_eq!(report["result"]["method"], "poisson");

    let (_, report) = run(&[
        "--job",
        jobs_dir().join("intersection.json").to_str().unwrap(),
    ]);
    assert_eq!(report["result"]["value"]["value"], "6");
}

#[test]
fn out_flag_writes_report() {
    let dir = tempdir();
    let out_path = dir.join("report.json");
    let job = jobs_dir().join("norm.json");
    let (out, _) = run(&[
        "--job",
        job.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(out_path).unwrap()).unwrap();
    assert_eq!(report["result"]["value"]["value"], "1");
}

#[test]
fn input_errors_exit_with_2() {
    let (code, report) = run_job(
        &json!({"command": "resultant", "payload": {"n_vars": 2, "forms": ["x0*x1 + x0", "x1"]}}),
        &[],
    );
    assert_eq!(code, 2);
    assert_eq!(report["error"]["type"], "NotHomogeneous");

    let (code, report) = run_job(
        &json!({"command": "intersection", "payload": {"n": 2}}),
        &[],
    );
    assert_eq!(code, 2);
    assert_eq!(report["error"]["type"], "InvalidJob");

    let (code, _) = run_job(&json!({"command": "launch"}), &[]);
    assert_eq!(code, 2);

    let (out, _) = run(&["--job", "/nonexistent/job.json"]);
    assert_eq!(out.status.code(), Some(2));

    let job = jobs_dir().join("resultant.json");
    let (out, _) = run(&["--job", job.to_str().unwrap(), "--mode", "sideways"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn computation_errors_exit_with_1() {
    let (code, report) = run_job(
        &json!({"command": "resultant", "payload": {"n_vars": 2, "forms": ["x1^2", "x0^2 + x1^2"]}}),
        &["--mode", "poisson"],
    );
    assert_eq!(code, 1);
    assert_eq!(report["error"]["type"], "PoissonPreconditionFailed");
}

#[test]
fn selftest_subset_is_reproducible() {
    let job = json!({"command": "selftest", "payload": {"properties": ["bezout", "norm_suite"]}});
    let (code, a) = run_job(&job, &["--seed", "7"]);
    let (_, mut b) = run_job(&job, &["--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(a["seed"], 7);
    let mut a = a;
    a.as_object_mut().unwrap().remove("timing_ms");
    b.as_object_mut().unwrap().remove("timing_ms");
    assert_eq!(a, b);
    assert_eq!(a["result"]["properties"].as_object().unwrap().len(), 2);
}
