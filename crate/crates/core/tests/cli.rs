use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cellhecke")).args(args).output().expect("spawn cellhecke");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn json_documents_carry_a_header() {
    let v = json(&["classify", "--n", "3", "--e", "2"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "classify");
    assert_eq!(v["ring"], "cyclo:2,a=1");
    assert_eq!(v["count"], 2);
}

#[test]
fn documented_examples() {
    assert_eq!(json(&["basis", "--algebra", "hc", "--n", "2"])["dim"], 8);
    assert_eq!(json(&["specht", "--lambda", "2,1", "--mu", "1,1,1", "--ring", "Qq"])["dim"], 2);
    assert_eq!(json(&["classify-super", "--n", "3", "--ring", "gf:3,q=1,a=1"])["count"], 1);
}

#[test]
fn text_products() {
    let (code, out, _) = run(&["--format", "text", "product", "--n", "3", "--left", "T1", "--right", "T1"]);
    assert_eq!(code, 0);
    assert!(out.contains("(q) * T[1,2,3] + (-1 + q) * T[2,1,3]"), "{out}");
}

#[test]
fn verify_reports_every_axiom() {
    let v = json(&["verify", "--algebra", "hecke", "--n", "3", "--ring", "Qaq"]);
    let names: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|a| a["axiom"].as_str().unwrap()).collect();
    for axiom in ["ideal_filter", "rigidity", "morita_context", "standard_basis"] {
        assert!(names.contains(&axiom), "{names:?}");
    }
    assert_eq!(v["passed"], true);
}

#[test]
fn failures_map_to_exit_codes() {
    assert_eq!(run(&["basis", "--algebra", "hecke", "--n", "3", "--bogus"]).0, 2);
    assert_eq!(run(&["classify", "--n", "3", "--ring", "gf:4,q=1"]).0, 2);
    assert_eq!(run(&["gram", "--lambda", "2,1", "--ring", "ZaQ"]).0, 2);
    assert_eq!(run(&["basis", "--algebra", "hecke", "--n", "9"]).0, 3);
    let (code, out, err) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("classify") && err.is_empty());
}
