use std::fs;
use std::process::{Command, Output};

const Z6: &str = r#"{"summands":[{"local":{"R":2,"J":1}},{"local":{"R":3,"J":1}}]}"#;
const M22: &str = r#"{"summands":[{"matrix":{"m":2,"q":2}}]}"#;
const M23: &str = r#"{"summands":[{"matrix":{"m":2,"q":3}}]}"#;

fn ringline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringline"))
        .args(args)
        .env_remove("RINGLINE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_reports_shape() {
    let o = ringline(&["build", "--spec", Z6]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "12 vertices, 6-regular, 36 edges\n");

    let o = ringline(&["build", "--spec", M22, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["vertices"], 35);
    assert_eq!(v["edges"], 280);
    assert_eq!(v["regular_degree"], 16);

    let o = ringline(&["build", "--spec", r#"{"summands":[]}"#]);
    assert_eq!(stdout(&o), "graph T\n");
}

#[test]
fn build_from_file_with_dot() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("z4.json");
    fs::write(&spec, r#"{"summands":[{"local":{"R":4,"J":2}}]}"#).unwrap();
    let dot = dir.path().join("z4.dot");
    let o = ringline(&["build", "--spec", spec.to_str().unwrap(), "--dot", dot.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "6 vertices, 4-regular, 12 edges\n");
    let text = fs::read_to_string(&dot).unwrap();
    assert_eq!(text.matches(" -- ").count(), 12);
}

#[test]
fn census_formats() {
    let o = ringline(&["census", "--spec", M22, "--kmax", "6"]);
    assert_eq!(stdout(&o), "clique counts k=0..6: 1,35,280,560,280,56,0\n");

    let o = ringline(&["census", "--spec", Z6, "--kmax", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["counts"], serde_json::json!([1, 12, 36, 24]));

    let o = ringline(&["census", "--spec", Z6, "--kmax", "2", "--format", "csv"]);
    assert_eq!(stdout(&o), "k,count\n0,1\n1,12\n2,36\n");
}

#[test]
fn unit_graph_profile() {
    let o = ringline(&[
        "census", "--spec", M23, "--unit-graph", "--kmax", "3", "--profile", "4", "--base", "1001,2002,0210",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("clique counts k=0..3: 1,48,648,3120\n"));
    assert!(out.ends_with("4: 8\n8: 1\n"));

    let o = ringline(&["census", "--spec", Z6, "--unit-graph", "--kmax", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_and_errors() {
    let o = Command::new(env!("CARGO_BIN_EXE_ringline"))
        .args(["census", "--spec", M22, "--kmax", "6"])
        .env("RINGLINE_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));

    for args in [
        &["verify", "nope"][..],
        &["build", "--spec", r#"{"summands":[{"local":{"R":6,"J":2}}]}"#],
        &["build", "--spec", "/no/such/file.json"],
        &["build", "--spec", M23, "--vertex-bound", "10"],
        &["census", "--spec", M22, "--kmax", "2", "--budget", "0"],
    ] {
        assert_eq!(ringline(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_and_tables() {
    let o = ringline(&["verify", "fixtures"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.ends_with("2 checks, 0 failed\n"), "{out}");

    let o = ringline(&["verify", "partitions", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|c| c["passed"] == true));

    let o = ringline(&["tables", "--format", "csv"]);
    assert!(stdout(&o).contains("C3,1,-2,-1,2,1\ncap1N,0,1,2,3,5\n"));
    let o = ringline(&["tables"]);
    assert!(stdout(&o).contains("m=2 q^3+2q^2+q+1 | q^2+2q+1\n"));
}
