//! Every JSON payload validates against the schemas shipped in docs/schemas.

use std::process::Command;

use serde_json::{json, Value};

const DOCS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/schemas");

fn load(file: &str) -> Value {
    let text = std::fs::read_to_string(format!("{DOCS}/{file}")).expect(file);
    serde_json::from_str(&text).expect(file)
}

fn run(args: &[&str]) -> Vec<u8> {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = Command::new(env!("CARGO_BIN_EXE_cohomo"))
        .args(&full)
        .env_remove("COHOMO_DB")
        .output()
        .unwrap();
    out.stdout
}

fn check(def: &str, args: &[&str]) {
    let stdout = run(args);
    assert_eq!(stdout, run(args), "output of {args:?} is not byte-stable");
    let env: Value = serde_json::from_slice(&stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));

    let envelope = jsonschema::validator_for(&load("envelope.schema.json")).unwrap();
    let errs: Vec<String> = envelope.iter_errors(&env).map(|e| e.to_string()).collect();
    assert!(errs.is_empty(), "{args:?} envelope: {errs:?}");

    let bundle = load("payloads.schema.json");
    let schema = json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$defs": bundle["$defs"],
        "$ref": format!("#/$defs/{def}"),
    });
    let v = jsonschema::validator_for(&schema).unwrap();
    let errs: Vec<String> = v
        .iter_errors(&env["payload"])
        .map(|e| format!("{} at {}", e, e.instance_path()))
        .collect();
    assert!(errs.is_empty(), "{args:?} payload: {errs:?}");
}

#[test]
fn space_payloads() {
    check("space-list", &["space", "list"]);
    for name in ["G2_2/SO4", "G2_C/G2", "OH2", "SL4(R)/SO4"] {
        check("space-info", &["space", "info", name]);
    }
    check("space-info", &["space", "info", "CH{n}", "--param", "3"]);
}

#[test]
fn parabolic_payloads() {
    check("parabolic", &["parabolic", "G2_2/SO4", "--phi", "1,2"]);
    check("parabolic", &["parabolic", "G2_C/G2", "--phi", "2"]);
    check("parabolic", &["parabolic", "SL3(R)/SO3", "--phi", "{}"]);
    check("parabolic-all", &["parabolic", "SL4(R)/SO4"]);
    check("gradation", &["gradation", "G2_2/SO4", "--phi", "2"]);
    check("boundary", &["boundary", "SL4(R)/SO4", "--phi", "1,3"]);
    check("boundary", &["boundary", "G2_C/G2", "--phi", "1"]);
    check("foliations", &["foliations", "SL4(R)/SO4"]);
}

#[test]
fn action_payloads() {
    check("extend", &["extend", "SL4(R)/SO4", "--phi", "1", "--inner", "point"]);
    check("extend", &["extend", "G2_2/SO4", "--phi", "2", "--inner", "point"]);
    let a = r#"{"support":["a[1,0,0|0,1,0]","g[0,1,0]","g[1,1,0]"]}"#;
    let b = r#"{"support":["a[1,0,0|0,1,0]","g[1,0,0]","g[1,1,0]"]}"#;
    check("equivalence", &["equivalence", "SL4(R)/SO4", "--phi", "1,2", "--inner-a", a, "--inner-b", b]);
    for (name, phi) in [("G2_2/SO4", "2"), ("G2_C/G2", "1"), ("G2_C/G2", "2"), ("OH2", "{}"), ("CH3", "{}")] {
        check("nilpotent", &["nilpotent", name, "--phi", phi]);
    }
}

#[test]
fn classify_payloads() {
    for name in ["SL3(R)/SO3", "SL4(R)/SO4", "G2_C/G2", "OH2", "HH2", "SOo(2,5)/SO2SO5"] {
        check("classify", &["classify", name]);
    }
    check("classify", &["classify", "SL3(R)/SO3", "--no-dedup"]);
    for name in ["SL3(R)/SO3", "SOo(2,3)/SO2SO3", "G2_2/SO4", "RH4"] {
        check("classify-diff", &["classify", name, "--diff-reference"]);
    }
    check("classify-diff", &["classify", "G2_2/SO4", "--diff-reference", "--no-dedup"]);
}

#[test]
fn db_payload() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/spaces.db");
    check("db-validate", &["db", "validate", path]);
}

#[test]
fn schemas_reject_malformed_payloads() {
    let bundle = load("payloads.schema.json");
    let validator = |def: &str| {
        jsonschema::validator_for(&json!({
            "$schema": "https://json-schema.org/draft/2020-12/schema",
            "$defs": bundle["$defs"],
            "$ref": format!("#/$defs/{def}"),
        }))
        .unwrap()
    };
    assert!(!validator("gradation").is_valid(&json!({"level_dims": [], "depth": 0})));
    assert!(!validator("gradation").is_valid(&json!({"level_dims": [2], "depth": 1, "extra": 1})));
    let d = validator("descriptor");
    assert!(!d.is_valid(&json!({"kind": "foliation-n", "key": "k", "support": ["a"]})));
    assert!(!d.is_valid(&json!({"kind": "custom", "key": "k", "support": ["q[1]"]})));
    assert!(d.is_valid(&json!({"kind": "custom", "key": "k", "support": ["a[1,-1|0,2]", "g[-0,1]", "g[1,1]-v", "h:su(1,2)"]})));
}
