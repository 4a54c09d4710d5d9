//! End-to-end checks of the binary: output schemas, exit codes, and
//! determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slicepoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn eval_trivial_fock_value() {
    let out = run(&[
        "eval", "--kind", "fock", "--order", "1", "--q", "0,0,0,0", "--r", "0,0,0,0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["value"][0], 1.0);
    assert_eq!(value["value"][1], 0.0);
    assert!(value["terms_used"].as_u64().unwrap() >= 1);
}

#[test]
fn eval_bergman_origin_value() {
    let out = run(&[
        "eval", "--kind", "bergman", "--order", "2", "--q", "0,0,0,0", "--r", "0,0,0,0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let v0 = value["value"][0].as_f64().unwrap();
    assert!((v0 - 4.0 / std::f64::consts::PI).abs() < 1e-14);
}

#[test]
fn eval_exit_codes() {
    // Outside the unit ball: domain error.
    let out = run(&[
        "eval", "--kind", "bergman", "--order", "1", "--q", "2,0,0,0", "--r", "0,0,0,0",
    ]);
    assert_eq!(out.status.code(), Some(3));

    // Invalid order: domain error.
    let out = run(&[
        "eval", "--kind", "fock", "--order", "0", "--q", "0,0,0,0", "--r", "0,0,0,0",
    ]);
    assert_eq!(out.status.code(), Some(3));

    // Unknown kind / malformed quaternion / misplaced --alt: usage errors.
    let out = run(&["eval", "--kind", "sobolev", "--q", "0,0,0,0", "--r", "0,0,0,0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["eval", "--kind", "fock", "--q", "0,0,0", "--r", "0,0,0,0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "eval", "--kind", "estar", "--alt", "--q", "0,0,0,0", "--r", "0,0,0,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_and_is_deterministic_up_to_timing() {
    let args = [
        "verify", "--suite", "all", "--seed", "7", "--samples", "10",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(second.status.code(), Some(0));

    let mut a: serde_json::Value = serde_json::from_str(stdout(&first).trim()).unwrap();
    let mut b: serde_json::Value = serde_json::from_str(stdout(&second).trim()).unwrap();
    for v in [&a, &b] {
        assert!(v["cases_run"].as_u64().unwrap() > 0);
        assert_eq!(v["cases_run"], v["cases_passed"]);
        assert!(v["worst_residual"].as_f64().unwrap() >= 0.0);
        assert!(v["elapsed_ms"].is_u64());
        assert_eq!(v["suite"], "all");
    }
    // Identical up to wall-clock timing.
    a["elapsed_ms"] = 0.into();
    b["elapsed_ms"] = 0.into();
    assert_eq!(a, b);
}

#[test]
fn verify_seed_changes_the_report() {
    let a = stdout(&run(&[
        "verify", "--suite", "structure", "--seed", "1", "--samples", "5",
    ]));
    let b = stdout(&run(&[
        "verify", "--suite", "structure", "--seed", "2", "--samples", "5",
    ]));
    let a: serde_json::Value = serde_json::from_str(a.trim()).unwrap();
    let b: serde_json::Value = serde_json::from_str(b.trim()).unwrap();
    assert_ne!(a["worst_residual"], b["worst_residual"]);
}

#[test]
fn verify_empty_run_succeeds() {
    let out = run(&["verify", "--suite", "all", "--samples", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["cases_run"], 0);
    assert_eq!(v["cases_passed"], 0);
    assert_eq!(v["worst_residual"], 0.0);
}

#[test]
fn verify_reports_failures_with_exit_one() {
    // A 2x2 plane rule cannot reproduce degree-4 monomials; the report
    // must still be emitted, with exit code 1.
    let out = run(&[
        "verify", "--suite", "fock", "--seed", "7", "--samples", "5", "--nodes", "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(v["cases_passed"].as_u64().unwrap() < v["cases_run"].as_u64().unwrap());
}

#[test]
fn table_fock_grid_shape_and_values() {
    let out = run(&[
        "table", "--kind", "fock", "--order", "1", "--slice", "i", "--grid", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines[0], "x,y,v0,v1,v2,v3");
    assert_eq!(lines.len(), 1 + 9);
    for row in &lines[1..] {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols.len(), 6);
        assert_eq!(cols[2], "1");
        assert_eq!(cols[3], "0");
    }

    // Byte-identical on re-run.
    let again = stdout(&run(&[
        "table", "--kind", "fock", "--order", "1", "--slice", "i", "--grid", "3",
    ]));
    assert_eq!(text, again);
}

#[test]
fn table_bergman_omits_off_disk_rows() {
    let out = run(&[
        "table", "--kind", "bergman", "--order", "1", "--grid", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    // Corners of the 3x3 grid lie outside the radius-0.95 disk.
    assert_eq!(lines.len(), 1 + 5);
    let origin = lines.iter().find(|l| l.starts_with("0,0,")).unwrap();
    let v0: f64 = origin.split(',').nth(2).unwrap().parse().unwrap();
    assert!((v0 - 1.0 / std::f64::consts::PI).abs() < 1e-15);
}

#[test]
fn table_rejects_bad_orders_with_exit_three() {
    let out = run(&["table", "--kind", "fock", "--order", "0", "--grid", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["table", "--kind", "bergman", "--order", "99", "--grid", "2"]);
    assert_eq!(out.status.code(), Some(3));
}
