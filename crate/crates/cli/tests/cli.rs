use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clifford-twist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = run(&all);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).unwrap())
}

#[test]
fn quaternion_table() {
    let (code, v) = json(&["table", "--signature", "--"]);
    assert_eq!(code, 0);
    let rows: Vec<Vec<String>> = serde_json::from_value(v["results"]["rows"].clone()).unwrap();
    // i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j
    assert_eq!(rows[1], ["e1", "-1", "e1*e2", "-e2"]);
    assert_eq!(rows[2], ["e2", "-e1*e2", "-1", "e1"]);
    assert_eq!(rows[3], ["e1*e2", "e2", "-e1", "-1"]);
    assert_eq!(v["results"]["blades"], serde_json::json!(["1", "e1", "e2", "e1*e2"]));
}

#[test]
fn json_schema() {
    let (_, v) = json(&["classify", "--signature", "++"]);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["command", "inputs", "results", "witnesses", "timing_ms"]);
    assert_eq!(v["command"], "classify");
    assert!(v["timing_ms"].is_null());
    let (_, v) = json(&["--timing", "classify", "--signature", "++"]);
    assert!(v["timing_ms"].is_number());
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["--json", "verify", "--suite", "closed-forms", "--seed", "7"][..],
        &["verify", "--suite", "dirac,adjoint", "--max-n", "2"][..],
        &["table", "-s", "+-+"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn classify_examples() {
    assert_eq!(stdout(&run(&["classify", "--signature", "++"])).trim(), "M_2");
    assert_eq!(stdout(&run(&["classify", "--signature", "-"])).trim(), "M_1+M_1");
    assert_eq!(stdout(&run(&["classify", "--signature", "----"])).trim(), "M_4");
    assert_eq!(stdout(&run(&["classify", "--signature", ""])).trim(), "M_1");
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&run(&["eval", "-s", "--", "e1*e2 - e2*e1"])).trim(), "2*e1*e2");
    assert_eq!(stdout(&run(&["eval", "-s", "--", "1"])).trim(), "1");
    assert_eq!(stdout(&run(&["eval", "-s", "2,-1/3", "e1*e1 + 3*e2*e2"])).trim(), "1");
    let o = run(&["eval", "-s", "--", "e3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("e3"));
}

#[test]
fn verify_named_suite() {
    let o = run(&["verify", "--signature", "+++", "--suite", "cocycle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS cocycle"));
}

#[test]
fn verify_sorts_suites() {
    let (code, v) = json(&["verify", "--suite", "theta,relations,cocycle", "--max-n", "3"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["suite"].as_str().unwrap()).collect();
    assert_eq!(names, ["cocycle", "relations", "theta"]);
}

#[test]
fn verify_failure_reports_witness() {
    // C(2,3) is outside the +-1 classifier, so the expected label is not confirmed
    let (code, v) = json(&["verify", "--suite", "classify", "--signature", "2,3"]);
    assert_eq!(code, 1);
    let w = v["witnesses"][0]["witness"].as_str().unwrap();
    assert!(w.contains("unclassified"), "{w}");
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["dirac"]).status.code(), Some(2));
    assert_eq!(run(&["table", "-s", "+++++++"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "-s", "+,0"]).status.code(), Some(2));
}

#[test]
fn verify_list() {
    let o = run(&["verify", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for name in ["cocycle", "closed-forms", "dirac", "rep-ladder"] {
        assert!(text.contains(name));
    }
}

#[test]
fn process_matches_clifford() {
    let (code, v) = json(&["process", "--steps", "+,-,+,-", "--verify", "clifford"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["clifford"], true);
    assert_eq!(v["results"]["generator_squares"], serde_json::json!(["1", "-1", "1", "-1"]));
    let (code, v) = json(&["process", "--steps", "+-+--++-+-", "--verify", "clifford"]);
    assert_eq!(code, 0);
    assert!(v["results"]["associative"].is_null());
    let (code, v) = json(&["process", "--steps", "2,i", "--verify", "clifford", "--show", "cochain"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["cochain"][3][3], "-2i");
}

#[test]
fn process_closed_forms_and_tables() {
    let (code, v) = json(&["process", "--steps", "+,-,+", "--verify", "closed-forms", "--show", "assoc,braiding"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["closed-forms"], true);
    assert_eq!(v["results"]["assoc"]["nontrivial"], 0);
    // e1 and e2 anticommute
    assert_eq!(v["results"]["braiding"][1][2], "-1");
    assert_eq!(run(&["process", "--steps", "", "--verify", "closed-forms"]).status.code(), Some(2));
    assert_eq!(run(&["process", "--steps", "+++++++", "--show", "cochain"]).status.code(), Some(2));
}

#[test]
fn spinor_models() {
    for model in ["twisted", "exterior", "lr"] {
        let o = run(&["spinor", "-s", "+-", "--model", model, "--check", "relations,faithful,compare"]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
        assert_eq!(stdout(&o).matches("PASS").count(), 5);
    }
    let o = run(&["spinor", "-s", "+", "--emit", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["results"]["matrices"][0], serde_json::json!([["0", "1"], ["1", "0"]]));
    assert_eq!(v["results"]["matrices"].as_array().unwrap().len(), 2);
}

#[test]
fn eval_json_terms() {
    let (code, v) = json(&["eval", "-s", "++", "3 + e2*e1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["value"], "3 - e1*e2");
    assert_eq!(v["results"]["terms"], serde_json::json!({ "1": "3", "e1*e2": "-1" }));
}

#[test]
fn dirac_commands() {
    let o = run(&["dirac", "--check-square", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS D^2 = -Laplacian on 140 monomial spinors"));
    let (code, v) = json(&["dirac", "--apply", "x1*x2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["forms_agree"], true);
    assert_eq!(run(&["dirac", "--apply", "x5"]).status.code(), Some(2));
}

#[test]
fn verify_all_passes() {
    let (code, v) = json(&["verify", "--all"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["results"].as_array().unwrap().len(), 20);
    assert!(v["witnesses"].as_array().unwrap().is_empty());
}
