use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn cohomo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cohomo"))
        .args(args)
        .env_remove("COHOMO_DB")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = cohomo(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn gradation_payload_is_exact() {
    let v = json(&["gradation", "G2_2/SO4", "--phi", "2"]);
    assert_eq!(v["tool"], "cohomo");
    assert_eq!(v["payload"], serde_json::json!({"level_dims": [2, 1, 2], "depth": 3}));
    assert_eq!(v["warnings"], serde_json::json!([]));
}

#[test]
fn full_phi_has_no_nilradical() {
    let v = json(&["parabolic", "G2_2/SO4", "--phi", "1,2"]);
    assert_eq!(v["payload"]["dim_n_phi"], 0);
    assert_eq!(v["payload"]["dim_l_phi"], 14);
}

#[test]
fn parabolic_enumeration() {
    let v = json(&["parabolic", "SL4(R)/SO4"]);
    assert_eq!(v["payload"].as_array().unwrap().len(), 8);
}

#[test]
fn classify_sl3_matches_reference() {
    for flag in ["--diff-paper", "--diff-reference"] {
        let out = cohomo(&["classify", "SL3(R)/SO3", flag]);
        assert_eq!(out.status.code(), Some(0));
        assert!(String::from_utf8_lossy(&out.stdout).contains("diff empty"));
    }
    let v = json(&["classify", "SL3(R)/SO3", "--diff-reference"]);
    assert_eq!(v["payload"]["report"]["items"].as_array().unwrap().len(), 4);
    assert_eq!(v["payload"]["diff"]["missing"], serde_json::json!([]));
}

#[test]
fn classify_without_dedup_reports_extras() {
    let out = cohomo(&["classify", "SL3(R)/SO3", "--diff-reference", "--no-dedup"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("extra (congruent)"));
}

#[test]
fn classify_without_corpus() {
    let out = cohomo(&["classify", "SL4(R)/SO4", "--diff-reference"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&["classify", "SL4(R)/SO4"]);
    assert_eq!(v["payload"]["complete"], false);
    assert!(!v["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(cohomo(&["space", "info", "SL5(R)/SO5"]).status.code(), Some(1));
    assert_eq!(cohomo(&["gradation", "G2_2/SO4", "--phi", "0"]).status.code(), Some(2));
    assert_eq!(cohomo(&["gradation", "G2_2/SO4", "--phi", "4"]).status.code(), Some(2));
    assert_eq!(cohomo(&["gradation", "G2_2/SO4"]).status.code(), Some(2));
    assert_eq!(cohomo(&["--help"]).status.code(), Some(0));
    assert_eq!(cohomo(&["--version"]).status.code(), Some(0));
    let out = cohomo(&["space", "info", "G2_2/SO3"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("G2_2/SO4"));
}

#[test]
fn space_commands() {
    let v = json(&["space", "list"]);
    assert!(v["payload"].as_array().unwrap().iter().any(|e| e["name"] == "G2_C/G2"));
    let v = json(&["space", "info", "SOo(2,{n+2})/SO2SO{n+2}", "--param", "3"]);
    assert_eq!(v["payload"]["dim"], 10);
}

#[test]
fn boundary_and_foliations() {
    let v = json(&["boundary", "G2_2/SO4", "--phi", "1"]);
    assert_eq!(v["payload"]["dim"], 2);
    let v = json(&["foliations", "SL4(R)/SO4"]);
    assert_eq!(v["payload"]["n_classes"].as_array().unwrap().len(), 2);
}

#[test]
fn extend_point() {
    let v = json(&["extend", "SL3(R)/SO3", "--phi", "1", "--inner", "point"]);
    assert_eq!(
        v["payload"]["descriptor"]["support"],
        serde_json::json!(["a[1,2]", "k[1,0]", "g[0,1]", "g[1,1]"])
    );
    assert_eq!(v["payload"]["orbit"]["singular_codim"], 2);
}

#[test]
fn extend_from_file_and_outside_boundary() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"descriptor": {{"support": ["a[1,0,0]", "k[1,0,0]"]}}, "orbit": {{"singular_codim": 2}}}}"#
    )
    .unwrap();
    let arg = format!("@{}", f.path().display());
    let v = json(&["extend", "SL4(R)/SO4", "--phi", "1", "--inner", &arg]);
    assert_eq!(v["payload"]["orbit"]["singular_codim"], 2);
    assert_eq!(v["payload"]["composition_checks"].as_array().unwrap().len(), 2);

    let bad = r#"{"support": ["g[0,1,0]"], "orbit": {"singular_codim": 1}}"#;
    let out = cohomo(&["extend", "SL4(R)/SO4", "--phi", "1", "--inner", bad]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn equivalence_verdicts() {
    let a = r#"{"support":["a[1,0,0|0,1,0]","g[0,1,0]","g[1,1,0]"]}"#;
    let b = r#"{"support":["a[1,0,0|0,1,0]","g[1,0,0]","g[1,1,0]"]}"#;
    let v = json(&["equivalence", "SL4(R)/SO4", "--phi", "1,2", "--inner-a", a, "--inner-b", b]);
    assert_eq!(v["payload"]["result"], "not-equivalent");
    let v = json(&["equivalence", "SL4(R)/SO4", "--phi", "1,2", "--inner-a", a, "--inner-b", b, "--via-identity"]);
    assert_eq!(v["payload"]["result"], "equivalent");
}

#[test]
fn nilpotent_candidates() {
    let v = json(&["nilpotent", "G2_2/SO4", "--phi", "2"]);
    let items = v["payload"].as_array().unwrap();
    assert!(items.iter().any(|c| c["verdict"] == "pass"));
    let out = cohomo(&["nilpotent", "SL4(R)/SO4", "--phi", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn db_validate() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/spaces.db");
    assert_eq!(cohomo(&["db", "validate", path]).status.code(), Some(0));

    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "name=X\nfamily=Q\nrank=2").unwrap();
    assert_eq!(cohomo(&["db", "validate", f.path().to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(cohomo(&["db", "validate", "/nonexistent/db"]).status.code(), Some(1));
}

#[test]
fn database_override() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        f,
        "name=SL3(R)/SO3\ngroup=SL3(R)\nisotropy=SO3\nfamily=A\nrank=2\nmult=1\ndim_k0=0\ndim_isotropy=3"
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_cohomo"))
        .args(["--format", "json", "space", "list"])
        .env("COHOMO_DB", f.path())
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["payload"].as_array().unwrap().len(), 1);
}
