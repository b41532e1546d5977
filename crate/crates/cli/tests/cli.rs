use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn harary(args: &[&str], stdin: &str) -> Output {
    harary_env(args, stdin, &[])
}

fn harary_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_harary"));
    cmd.args(args)
        .env_remove("HARARY_MAX_N")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn assert_usage_error(o: &Output) {
    assert_eq!(o.status.code(), Some(2), "stderr: {}", stderr(o));
    assert_eq!(
        stderr(o).trim_end().lines().count(),
        1,
        "diagnostic: {:?}",
        stderr(o)
    );
}

#[test]
fn compute_star() {
    // D?{ is K_{1,4} with centre 4
    let o = harary(&["compute"], "D?{\n\n");
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1);
    let v: Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(v["graph6"], "D?{");
    assert_eq!(v["n"], 5);
    assert_eq!(v["edges"], 4);
    assert_eq!(v["harary"], "7/1");
    assert_eq!(v["harary_decimal"], 7.0);
    assert_eq!(v["wiener"], 16);
    assert_eq!(v["gamma"]["1"], 4);
    assert_eq!(v["gamma"]["2"], 6);
    assert_eq!(v["connected"], true);
}

#[test]
fn compute_disconnected_has_null_wiener() {
    // K2 ∪ K3 on 5 vertices: edges 01, 23, 24, 34
    let o = harary(&["compute"], "D`K\n");
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["connected"], false);
    assert_eq!(v["wiener"], Value::Null);
    assert_eq!(v["harary"], "4/1");
}

#[test]
fn compute_csv() {
    let o = harary(&["compute", "--format", "csv"], "D?{\nC~\n");
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(
        rows[0],
        "graph6,n,edges,harary,harary_decimal,wiener,gamma,connected"
    );
    assert_eq!(rows[1], "D?{,5,4,7/1,7,16,1:4 2:6,true");
    assert_eq!(rows[2], "C~,4,6,6/1,6,6,1:6,true");
}

#[test]
fn malformed_graph6_is_usage_error() {
    let o = harary(&["compute"], "D?{\nD?\n");
    assert_usage_error(&o);
    assert!(stderr(&o).contains("line 2"));
}

#[test]
fn connectivity_star() {
    let o = harary(&["connectivity"], "D?{\n");
    assert!(o.status.success());
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["kappa"], 1);
    assert_eq!(v["lambda"], 1);
    assert_eq!(v["cut_vertices"], serde_json::json!([4]));
    assert_eq!(
        v["blocks"],
        serde_json::json!([[0, 4], [1, 4], [2, 4], [3, 4]])
    );
}

#[test]
fn construct_knr() {
    let o = harary(&["construct", "knr", "--n", "6", "--r", "2"], "");
    assert!(o.status.success());
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["family"], "knr");
    assert_eq!(v["r"], 2);
    assert_eq!(v["graph"]["harary"], "27/2");
    assert_eq!(v["graph"]["edges"], 12);
    assert_eq!(v["n"], 6);
}

#[test]
fn construct_out_of_range() {
    assert_usage_error(&harary(&["construct", "knr", "--n", "5", "--r", "7"], ""));
    assert_usage_error(&harary(&["construct", "gnk", "--n", "5", "--k", "4"], ""));
}

#[test]
fn construct_second_max_lists_every_class() {
    let o = harary(&["construct", "second-max", "--n", "7", "--r", "3"], "");
    assert!(o.status.success());
    let records: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 4);
    assert!(records.iter().all(|r| r["graph"]["harary"] == "19/1"));
}

#[test]
fn usage_errors() {
    assert_usage_error(&harary(&["frobnicate"], ""));
    assert_usage_error(&harary(&["construct", "knr", "--n", "x", "--r", "1"], ""));
    assert_usage_error(&harary(&["compute", "--format", "xml"], ""));
    assert_usage_error(&harary(
        &[
            "enumerate",
            "--n",
            "5",
            "--classify",
            "cut",
            "--workers",
            "0",
        ],
        "",
    ));
}

#[test]
fn transform_per2() {
    let o = harary(
        &[
            "transform",
            "per2",
            "--p",
            "3",
            "--q",
            "3",
            "--t",
            "1",
            "--s",
            "1",
        ],
        "",
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["before"]["n"], v["after"]["n"]);
    let inc: Vec<i64> = v["increase"]
        .as_str()
        .unwrap()
        .split('/')
        .map(|x| x.parse().unwrap())
        .collect();
    assert!(inc[0] > 0 && inc[1] > 0);
}

#[test]
fn transform_rejects_bad_hypotheses() {
    // P3 endpoints 0 and 1 are not twins
    assert_usage_error(&harary(
        &[
            "transform",
            "shift",
            "--graph",
            "Bg",
            "--u",
            "0",
            "--v",
            "1",
            "--t",
            "3",
            "--s",
            "1",
        ],
        "",
    ));
}

#[test]
fn enumerate_is_independent_of_workers() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, w) in [(&a, "1"), (&b, "3")] {
        let o = harary(
            &[
                "enumerate",
                "--n",
                "5",
                "--classify",
                "kappa",
                "--workers",
                w,
                "--out",
                path.to_str().unwrap(),
            ],
            "",
        );
        assert!(o.status.success(), "{}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
    let (ja, jb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ja, jb);
    let v: Value = serde_json::from_slice(&ja).unwrap();
    assert_eq!(v["connected_graphs"], 728);
    assert_eq!(v["labeled_graphs"], 1024);
    assert_eq!(v["kind"], "vertex-connectivity");
}

#[test]
fn enumerate_csv() {
    let o = harary(
        &[
            "enumerate",
            "--n",
            "4",
            "--classify",
            "cut",
            "--format",
            "csv",
        ],
        "",
    );
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("class,tier,harary,"));
    // K4 is the only graph in class 0 at the top
    assert!(out.lines().any(|l| l == "0,best,6/1,6,1,C~,1"));
}

#[test]
fn enumeration_caps() {
    assert_usage_error(&harary(&["enumerate", "--n", "8", "--classify", "cut"], ""));
    assert_usage_error(&harary(
        &[
            "enumerate",
            "--n",
            "9",
            "--classify",
            "cut",
            "--allow-large",
        ],
        "",
    ));
    assert_usage_error(&harary_env(
        &["enumerate", "--n", "6", "--classify", "cut"],
        "",
        &[("HARARY_MAX_N", "5")],
    ));
    // the variable never raises the cap
    assert_usage_error(&harary_env(
        &[
            "enumerate",
            "--n",
            "9",
            "--classify",
            "cut",
            "--allow-large",
        ],
        "",
        &[("HARARY_MAX_N", "12")],
    ));
}

#[test]
fn verify_connectivity_passes() {
    let o = harary(&["verify", "connectivity", "--n", "6"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["claims"].as_array().unwrap().len(), 8);
    assert!(v.get("elapsed").is_none());
}

#[test]
fn verify_ordering_csv() {
    let o = harary(&["verify", "ordering", "--n", "5", "--format", "csv"], "");
    assert!(o.status.success());
    let out = stdout(&o);
    for value in ["10/1", "17/2", "22/3", "77/12"] {
        assert!(out.contains(value), "{value} missing from {out}");
    }
}

#[test]
fn verify_lemmas_is_reproducible() {
    let args = ["verify", "lemmas", "--trials", "10", "--seed", "42"];
    let (a, b) = (harary(&args, ""), harary(&args, ""));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_usage_error(&harary(&["verify", "lemmas", "--trials", "0"], ""));
}
