use std::process::{Command, Output};

use serde_json::Value;

fn srk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srk"))
        .args(args)
        .env_remove("SRK_CAP_GROUP")
        .env_remove("SRK_CAP_ENUM")
        .env_remove("SRK_CAP_ORBITS")
        .env_remove("SRK_CAP_CLOSURE")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn thm4_on_klein_group_has_two_classes() {
    let out = srk(&["--json", "verify", "thm4", "--instance", r#"{"cyclic_factors":[2,2]}"#]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["statement_id"], "thm4");
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["details"]["classes"].as_array().unwrap().len(), 2);
}

#[test]
fn counterexample_for_three() {
    let out = srk(&["--json", "counterexample", "--p", "3"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["sizes"], serde_json::json!([1, 4, 4]));
    assert_eq!(v["sring"]["basic_sets"].as_array().unwrap().len(), 3);
}

#[test]
fn counterexample_rejects_two() {
    let out = srk(&["counterexample", "--p", "2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn validate_reports_inverse_witness() {
    // {1,2} in Z_5 does not contain -1 = 4.
    let bad = r#"{"group":{"cyclic_factors":[5]},"basic_sets":[[[0]],[[1],[2]],[[3]],[[4]]]}"#;
    let out = srk(&["--json", "sring", "validate", bad]);
    assert_eq!(code(&out), 2);
    let v = stdout_json(&out);
    assert_eq!(v["error"], "not_inverse_closed");
    assert!(!v["witness"].is_null());
}

#[test]
fn validate_accepts_cyclotomic_ring() {
    let good = r#"{"group":{"cyclic_factors":[5]},"basic_sets":[[[0]],[[1],[4]],[[2],[3]]]}"#;
    let out = srk(&["--json", "sring", "validate", good]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["rank"], 3);
}

#[test]
fn cap_exceeded_exits_three() {
    let out = srk(&["--cap-enum", "8", "sring", "enumerate", r#"{"cyclic_factors":[9]}"#]);
    assert_eq!(code(&out), 3);
    let out = Command::new(env!("CARGO_BIN_EXE_srk"))
        .args(["sring", "enumerate", r#"{"cyclic_factors":[3,3]}"#])
        .env("SRK_CAP_ENUM", "4")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
}

#[test]
fn malformed_json_exits_two() {
    assert_eq!(code(&srk(&["group", "info", "{not json"])), 2);
    assert_eq!(code(&srk(&["group", "info", r#"{"cyclic_factors":[2],"extra":1}"#])), 2);
    assert_eq!(code(&srk(&["verify", "nope", "--instance", "{}"])), 2);
}

#[test]
fn usage_error_exits_two() {
    assert_eq!(code(&srk(&["sring"])), 2);
}

#[test]
fn failing_statement_exits_one() {
    let out = srk(&["verify", "separating", "--instance", r#"{"cyclic_factors":[2,4]}"#]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn non_local_pair_is_a_negative_answer() {
    // Trivial K on Z_3: the orbit of 1 misses 2, and {0, 2} is not a subgroup.
    let pair = r#"{"group":{"cyclic_factors":[3]},"generators":[],"e":[1]}"#;
    assert_eq!(code(&srk(&["ring", "from-pair", pair])), 1);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--json", "sring", "enumerate", r#"{"cyclic_factors":[2,4]}"#, "--k", "aut"];
    let a = srk(&args);
    let b = srk(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let args = ["--json", "verify", "lemma22", "--instance", r#"{"cyclic_factors":[6]}"#];
    assert_eq!(srk(&args).stdout, srk(&args).stdout);
}

#[test]
fn enumerated_srings_validate() {
    let out = srk(&["--json", "sring", "enumerate", r#"{"cyclic_factors":[8]}"#]);
    let v = stdout_json(&out);
    assert_eq!(v["count"], 10);
    for s in v["srings"].as_array().unwrap() {
        let input = serde_json::json!({"group": {"cyclic_factors": [8]}, "basic_sets": s["basic_sets"]});
        let out = srk(&["sring", "validate", &input.to_string()]);
        assert_eq!(code(&out), 0, "{input}");
    }
}

#[test]
fn ring_tables_round_trip() {
    let out = srk(&["--json", "ring", "make", r#"{"kind":"gf","p":2,"k":2}"#]);
    assert_eq!(code(&out), 0);
    let mut v = stdout_json(&out);
    assert_eq!(v["summary"]["field"], true);
    v.as_object_mut().unwrap().remove("summary");
    let again = srk(&["--json", "ring", "make", &v.to_string()]);
    let mut w = stdout_json(&again);
    w.as_object_mut().unwrap().remove("summary");
    assert_eq!(v, w);
}

#[test]
fn file_arguments() {
    let dir = std::env::temp_dir().join(format!("srk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.json");
    std::fs::write(&path, r#"{"cyclic_factors":[4,2]}"#).unwrap();
    let out = srk(&["--json", "group", "info", &format!("@{}", path.display())]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["order"], 8);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn dual_of_cyclic_ring() {
    let s = r#"{"group":{"cyclic_factors":[5]},"basic_sets":[[[0]],[[1],[4]],[[2],[3]]]}"#;
    let out = srk(&["--json", "sring", "dual", s]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["basic_sets"].as_array().unwrap().len(), 3);
}
