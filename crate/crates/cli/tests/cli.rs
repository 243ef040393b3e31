use std::io::Write;
use std::process::{Command, Output, Stdio};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliquehull"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn cli_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cliquehull"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).expect("stdout is one JSON document")
}

#[test]
fn turan_vectors() {
    let o = cli(&["turan", "-n", "6", "-r", "3"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "6 12 8\n"));
    assert_eq!(stdout(&cli(&["turan", "-n", "5", "-r", "1"])), "5\n");
    let o = cli(&["turan", "-n", "5", "-r", "2", "--graph"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("5 6"));
    assert_eq!(lines.next(), Some("n=5"));
    assert_eq!(lines.count(), 6);
}

#[test]
fn turan_json_and_csv() {
    let v = json(&cli(&["turan", "-n", "5", "-r", "2", "--graph", "--format", "json"]));
    assert_eq!(v["clique_vector"], serde_json::json!([5, 6]));
    assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 6);
    assert_eq!(stdout(&cli(&["turan", "-n", "4", "-r", "2", "--format", "csv"])), "k,count\n1,4\n2,4\n");
}

#[test]
fn turan_errors() {
    assert_eq!(code(&cli(&["turan", "-n", "0", "-r", "2"])), 2);
    let o = cli(&["turan", "-n", "400", "-r", "200"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("overflow"));
}

#[test]
fn check_verdicts() {
    let o = cli(&["check", "-f", "5,6", "-n", "5", "-r", "2"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "inside\ncoefficients: 0 1\n"));
    let o = cli(&["check", "-f", "3,2,1", "-g", "3,3,1"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("pair (3,2)"));
    let o = cli(&["check", "-f", "0,0", "-n", "9", "-r", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("inside"));
}

#[test]
fn check_json_shapes() {
    let v = json(&cli(&["check", "-f", "4,5,2", "-g", "6,12,8", "--format", "json"]));
    assert_eq!(v["certificate"]["verdict"], "inside");
    assert_eq!(v["certificate"]["coefficients"][1], serde_json::json!({"num": 1, "den": 6}));
    let v = json(&cli(&["check", "-f", "3,2,1", "-g", "3,3,1", "--format", "json"]));
    assert_eq!(
        v["certificate"],
        serde_json::json!({"verdict": "outside", "violation": {"kind": "pair", "i": 3, "j": 2}})
    );
}

#[test]
fn check_errors() {
    let o = cli(&["check", "-f", "1,x", "-g", "3"]);
    assert_eq!(code(&o), 5);
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 2"));
    assert_eq!(code(&cli(&["check", "-f", "1", "-g", "3,0,1"])), 2);
    assert_eq!(code(&cli(&["check", "-f", "1,2"])), 2);
    assert_eq!(code(&cli(&["check", "-f", "1.5", "-g", "3"])), 5);
}

#[test]
fn verify_examples() {
    let o = cli(&["verify", "thm31", "-n", "5", "-r", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("PASS thm31 n=5 r=2:"));
    let v = json(&cli(&["verify", "thm11", "-n", "4", "-r", "2", "--format", "json"]));
    assert_eq!(v["failure_count"], 0);
    assert_eq!(v["instances_checked"].as_u64().unwrap() + v["skipped"].as_u64().unwrap(), 168);
    let o = cli(&["verify", "thm11", "-n", "6", "-r", "3"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--long-run"));
    assert_eq!(code(&cli(&["verify", "zykov", "-n", "4"])), 2);
}

#[test]
fn verify_output_is_deterministic() {
    let args = ["verify", "section5", "-n", "7", "-r", "3", "-k", "2", "--samples", "300", "--format", "json"];
    let a = cli(&args);
    let mut more = args.to_vec();
    more.extend(["--workers", "3"]);
    let b = cli(&more);
    assert_eq!(code(&a), 0);
    let (mut va, mut vb) = (json(&a), json(&b));
    // the config echoes the worker count; everything else must match byte for byte
    va["config"]["workers"] = 0.into();
    vb["config"]["workers"] = 0.into();
    assert_eq!(va, vb);
    assert_eq!(stdout(&a), stdout(&cli(&args)));
}

#[test]
fn verify_writes_report_file() {
    let path = std::env::temp_dir().join(format!("cliquehull-report-{}.json", std::process::id()));
    let o = cli(&["verify", "symmetrize", "-n", "4", "--out", path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("symmetrize,4,"));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(report["instances_checked"], 64);
    assert!(report["wall_time_ms"].is_u64());
}

#[test]
fn cliques_inputs() {
    let k4 = "n=4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
    assert_eq!(stdout(&cli_stdin(&["cliques", "-"], k4)), "4 6 4 1\nω=4\n");
    assert_eq!(stdout(&cli(&["cliques", "--text", "Dhc"])), "5 5\nω=2\n");
    assert_eq!(stdout(&cli(&["cliques", "--text", "n=3"])), "3\nω=1\n");
    let v = json(&cli(&["cliques", "--text", "{\"n\":3,\"edges\":[[1,2]]}", "--format", "json"]));
    assert_eq!(v["clique_number"], 2);
}

#[test]
fn cliques_parse_errors() {
    let o = cli(&["cliques", "--text", "n=3\n1 2\n2 x"]);
    assert_eq!(code(&o), 5);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(code(&cli(&["cliques", "--text", "n=3\n1 4"])), 5);
}

#[test]
fn fvector_of_complex() {
    let o = cli_stdin(&["fvector"], "n=4\n1 2 3\n3 4\n");
    assert_eq!(stdout(&o), "4 4 1\nchromatic=3\n");
    let v = json(&cli(&["fvector", "--text", "{\"n\":3,\"facets\":[[1,2]]}", "--format", "json"]));
    assert_eq!(v["face_vector"], serde_json::json!([2, 1]));
}
