use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(self.stdout.trim()).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn rootpoly(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rootpoly"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn m2q() -> Value {
    json!({"kind": "matrix", "k": 2, "field": {"kind": "rational"}})
}

fn quaternions() -> Value {
    json!({"kind": "quaternion"})
}

const ONE: [&str; 4] = ["1", "0", "0", "0"];
const ZERO: [&str; 4] = ["0", "0", "0", "0"];
const I: [&str; 4] = ["0", "1", "0", "0"];
const J: [&str; 4] = ["0", "0", "1", "0"];

#[test]
fn i_and_j_give_x_squared_plus_one() {
    let job = json!({"ring": quaternions(), "elements": [I, J]});
    let run = rootpoly(&["construct", "--trace", "--verify"], &job.to_string());
    assert_eq!(run.code, 0, "{}", run.stderr);
    let out = run.json();
    assert_eq!(out["polynomial"]["coefficients"], json!([ONE, ZERO, ONE]));
    assert_eq!(out["residuals"], json!([ZERO, ZERO]));
    assert_eq!(out["trace"]["steps"][0]["branch"], "conjugate");
    assert_eq!(out["trace"]["steps"][0]["conjugated_root"], json!(["0", "-1", "0", "0"]));
    assert!(out.get("obstruction").is_none());
}

#[test]
fn single_root_gives_a_linear_factor() {
    let job = json!({"ring": quaternions(), "elements": [["1/2", "1", "0", "-3"]]});
    let run = rootpoly(&["construct"], &job.to_string());
    assert_eq!(run.code, 0);
    assert_eq!(
        run.json()["polynomial"]["coefficients"],
        json!([["-1/2", "-1", "0", "3"], ONE])
    );
}

#[test]
fn singular_evaluation_obstructs() {
    let ring = json!({"kind": "matrix", "k": 2, "field": {"kind": "prime", "p": 2}});
    let job = json!({"ring": ring, "elements": [[[0, 0], [0, 0]], [[1, 0], [0, 0]]]});
    let run = rootpoly(&["construct", "--trace"], &job.to_string());
    assert_eq!(run.code, 2);
    let out = run.json();
    assert_eq!(out["polynomial"], Value::Null);
    assert_eq!(out["obstruction"]["step"], 1);
    assert_eq!(out["obstruction"]["root_index"], 2);
    assert_eq!(out["obstruction"]["evaluation_value"], json!([[1, 0], [0, 0]]));
    assert_eq!(out["trace"]["steps"][0]["branch"], "failed");
}

#[test]
fn exact_degree_pads_repeated_roots() {
    let job = json!({"ring": quaternions(), "elements": [I, I, J]});
    let run = rootpoly(&["construct", "--exact-degree", "--verify"], &job.to_string());
    assert_eq!(run.code, 0);
    let out = run.json();
    assert_eq!(out["polynomial"]["coefficients"].as_array().unwrap().len(), 4);
    assert_eq!(out["residuals"], json!([ZERO, ZERO, ZERO]));
}

#[test]
fn quadratic_with_a1_override() {
    let job = json!({"ring": m2q(), "elements": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]});
    let run = rootpoly(&["quadratic", "--a1", "[[0,0],[0,0]]"], &job.to_string());
    assert_eq!(run.code, 0, "{}", run.stderr);
    let out = run.json();
    assert_eq!(out["exists"], true);
    assert_eq!(out["rank"], 1);
    assert_eq!(out["a0"], json!([["-1", "0"], ["0", "-1"]]));
    assert_eq!(out["coefficients"], json!([[["0", "0"], ["0", "0"]]]));
}

#[test]
fn rejected_a1_override_is_semantic() {
    let job = json!({"ring": m2q(), "elements": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]});
    let run = rootpoly(&["quadratic", "--a1", "[[0,1],[0,0]]"], &job.to_string());
    assert_eq!(run.code, 65);
}

#[test]
fn no_quadratic_through_a_singular_difference() {
    let job = json!({"ring": m2q(), "elements": [[[0, 0], [1, -1]], [[0, 0], [0, 1]]]});
    let run = rootpoly(&["quadratic"], &job.to_string());
    assert_eq!(run.code, 3);
    let out = run.json();
    assert_eq!(out["exists"], false);
    assert_eq!(out["rank"], 1);
    assert_eq!(out["rank_augmented"], 2);
    assert_eq!(out["a0"], Value::Null);

    let cubic = rootpoly(&["degree-n", "--n", "3"], &job.to_string());
    assert_eq!(cubic.code, 0);
    assert_eq!(cubic.json()["exists"], true);
}

#[test]
fn no_cubic_for_the_three_by_three_pair() {
    let ring = json!({"kind": "matrix", "k": 3, "field": {"kind": "rational"}});
    let job = json!({
        "ring": ring,
        "n": 3,
        "elements": [[[1, -1, 0], [-1, 1, 0], [1, 0, 0]], [[1, 1, 2], [-1, 1, 0], [1, 0, 0]]],
    });
    let run = rootpoly(&["degree-n"], &job.to_string());
    assert_eq!(run.code, 3);
    assert_eq!(run.json()["exists"], false);
}

#[test]
fn verify_reports_residuals() {
    let p = json!({"ring": m2q(), "coefficients": [[[0, 0], [0, 0]], [[1, 0], [-1, -1]], [[0, 0], [0, 0]], [[1, 0], [0, 1]]]});
    let job = json!({"polynomial": p, "elements": [[[0, 0], [1, -1]], [[0, 0], [0, 1]]]});
    let run = rootpoly(&["verify"], &job.to_string());
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(run.json()["all_zero"], true);

    let p = json!({"ring": quaternions(), "coefficients": [ONE, ZERO, ONE]});
    let job = json!({"polynomial": p, "elements": [I, J, ["0", "3/5", "4/5", "0"]]});
    let run = rootpoly(&["verify"], &job.to_string());
    assert_eq!(run.code, 0);
    assert_eq!(run.json()["residuals"], json!([ZERO, ZERO, ZERO]));

    let p = json!({"ring": quaternions(), "coefficients": [["0", "-1", "0", "0"], ONE]});
    let job = json!({"polynomial": p, "elements": [J]});
    let run = rootpoly(&["verify"], &job.to_string());
    assert_eq!(run.code, 1);
    assert_eq!(run.json()["residuals"], json!([["0", "-1", "1", "0"]]));
}

#[test]
fn constructed_polynomial_round_trips_through_verify() {
    let elements = json!([["1", "2", "0", "-1"], ["0", "1/3", "1", "1"], ["2", "0", "0", "5"]]);
    let job = json!({"ring": quaternions(), "elements": elements});
    let built = rootpoly(&["construct"], &job.to_string());
    assert_eq!(built.code, 0);
    let poly = built.json()["polynomial"].clone();
    let check = json!({"polynomial": poly, "elements": elements});
    let run = rootpoly(&["verify"], &check.to_string());
    assert_eq!(run.code, 0);
    assert_eq!(run.json()["all_zero"], true);
}

#[test]
fn malformed_input_exits_64() {
    assert_eq!(rootpoly(&["construct"], "{not json").code, 64);
    assert_eq!(rootpoly(&["construct"], "[1, 2]").code, 64);
    assert_eq!(rootpoly(&["construct"], r#"{"ring": {"kind": "octonion"}, "elements": []}"#).code, 64);
    let job = json!({"ring": m2q(), "elements": [[[1, 2, 3]]]});
    assert_eq!(rootpoly(&["construct"], &job.to_string()).code, 65);
    assert_eq!(rootpoly(&["frobnicate"], "{}").code, 64);
    assert_eq!(rootpoly(&["degree-n"], &json!({"ring": m2q(), "elements": []}).to_string()).code, 64);
}

#[test]
fn semantic_errors_exit_65() {
    let p = json!({"ring": quaternions(), "coefficients": [ONE]});
    let mismatch = json!({"ring": m2q(), "polynomial": p, "elements": [[[1, 0], [0, 1]]]});
    assert_eq!(rootpoly(&["verify"], &mismatch.to_string()).code, 65);

    let equal = json!({"ring": m2q(), "elements": [[[1, 0], [0, 1]], [[1, 0], [0, 1]]]});
    assert_eq!(rootpoly(&["quadratic"], &equal.to_string()).code, 65);

    let not_matrix = json!({"ring": quaternions(), "elements": [I, J]});
    assert_eq!(rootpoly(&["quadratic"], &not_matrix.to_string()).code, 65);

    let composite = json!({"ring": {"kind": "field", "field": {"kind": "prime", "p": 4}}, "elements": [1]});
    assert_eq!(rootpoly(&["construct"], &composite.to_string()).code, 65);

    let wrong_command = json!({"command": "verify", "ring": quaternions(), "elements": [I]});
    assert_eq!(rootpoly(&["construct"], &wrong_command.to_string()).code, 65);

    let empty = json!({"ring": quaternions(), "elements": []});
    assert_eq!(rootpoly(&["construct"], &empty.to_string()).code, 65);
}

#[test]
fn cross_check_streams_records_then_summary() {
    let job = json!({"ring": {"kind": "matrix", "k": 1, "field": {"kind": "prime", "p": 3}}});
    let run = rootpoly(&["cross-check", "--n", "2"], &job.to_string());
    assert_eq!(run.code, 0, "{}", run.stderr);
    let lines: Vec<Value> = run.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 7);
    assert!(lines[..6].iter().all(|l| l["agrees"] == true));
    let summary = &lines[6]["summary"];
    assert_eq!(summary["pairs"], 6);
    assert_eq!(summary["admitting"], 6);
    assert_eq!(summary["disagreements"], 0);
    assert_eq!(summary["count_law_violations"], 0);
}

#[test]
fn cross_check_refuses_infinite_rings() {
    let run = rootpoly(&["cross-check"], &json!({"ring": m2q()}).to_string());
    assert_eq!(run.code, 65);
}

#[test]
fn reads_job_from_file() {
    let path = std::env::temp_dir().join(format!("rootpoly-job-{}.json", std::process::id()));
    std::fs::write(&path, json!({"ring": quaternions(), "elements": [I, J]}).to_string()).unwrap();
    let run = rootpoly(&["construct", "--pretty", "--input", path.to_str().unwrap()], "");
    std::fs::remove_file(&path).ok();
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains('\n') && run.stdout.lines().count() > 1);
    assert_eq!(run.json()["polynomial"]["coefficients"], json!([ONE, ZERO, ONE]));
}
