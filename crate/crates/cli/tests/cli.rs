use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn lqt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lqt")).current_dir(root()).env_remove("LQT_JOBS").args(args).output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn dims(v: &Value) -> Vec<u64> {
    v["degrees"].as_array().unwrap().iter().map(|d| d["dim"].as_u64().unwrap()).collect()
}

fn schema() -> jsonschema::JSONSchema {
    let s: Value = serde_json::from_str(&std::fs::read_to_string(root().join("docs/report.schema.json")).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&s).unwrap()
}

#[test]
fn cyclic_homology_of_the_ground_field() {
    let o = lqt(&["homology", "--complex", "cyclic", "--algebra", "configs/algebras/k.json", "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(dims(&v), vec![1, 0, 1, 0, 1]);
    assert_eq!(v["degrees"][2]["representatives"][0][0], serde_json::json!(["[1⊗1⊗1]", "1"]));
}

#[test]
fn abelian_ce_complex_has_zero_boundaries() {
    let o = lqt(&["homology", "--complex", "ce", "--algebra", "configs/algebras/zero1.json", "-n", "2", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(dims(&v), vec![1, 4, 6]);
    assert_eq!(v["chain_dims"], serde_json::json!([1, 4, 6]));
}

#[test]
fn homology_writes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bar.json");
    let o = lqt(&["homology", "--complex", "bar", "--algebra", "k", "--max-degree", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    // the bar complex of a unital algebra is acyclic
    assert_eq!(dims(&v), vec![0, 0, 0, 0]);
}

#[test]
fn decompose_gl2_k() {
    let o = lqt(&["decompose", "--algebra", "k", "-n", "2", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let totals: Vec<u64> = v["degrees"].as_array().unwrap().iter().map(|d| d["total"].as_u64().unwrap()).collect();
    assert_eq!(totals, vec![1, 4, 6, 4]);
    let csv = lqt(&["decompose", "--algebra", "k", "-n", "2", "--max-degree", "1", "--csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.contains("1,\"[(1),(1)]_2\",1,3"), "{text}");
}

#[test]
fn psi_witness_is_printed_and_exit_is_zero() {
    let o = lqt(&["verify", "psi-not-chainmap", "--config", "configs/uv.json", "--deterministic"]);
    assert_eq!(o.status.code(), Some(0));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("[u]·[u⊗v]") && err.contains("e11⊗u∧e11⊗v"), "{err}");
    let v = json(&o);
    assert!(schema().is_valid(&v));
    let w = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "psi-not-chainmap").unwrap();
    assert_eq!(w["witness"]["discrepancy"], serde_json::json!([["e11⊗u∧e11⊗v", "-1"]]));
}

#[test]
fn reports_validate_and_are_reproducible() {
    let schema = schema();
    for (kind, config) in [
        ("phi-chainmap", "configs/small-sweep.json"),
        ("phi-iso", "configs/small-sweep.json"),
        ("lemma21", "configs/small-sweep.json"),
        ("lemma23", "configs/zero-mult.json"),
        ("duality", "configs/zero-mult.json"),
        ("stability", "configs/zero-mult.json"),
        ("lqt", "configs/lqt-k.json"),
        ("lqt-pro", "configs/lqt-pro-nil3.json"),
    ] {
        let a = lqt(&["verify", kind, "--config", config, "--deterministic", "--jobs", "1"]);
        assert_eq!(a.status.code(), Some(0), "{kind}: {}", String::from_utf8_lossy(&a.stderr));
        let v = json(&a);
        if let Err(errors) = schema.validate(&v) {
            panic!("{kind}: {:?}", errors.map(|e| e.to_string()).collect::<Vec<_>>());
        }
        let b = Command::new(env!("CARGO_BIN_EXE_lqt"))
            .current_dir(root())
            .env("LQT_JOBS", "2")
            .args(["verify", kind, "--config", config, "--deterministic"])
            .output()
            .unwrap();
        assert_eq!(a.stdout, b.stdout, "{kind}");
    }
}

#[test]
fn timing_is_reported_without_deterministic() {
    let o = lqt(&["verify", "lqt", "--config", "configs/lqt-k.json"]);
    assert!(json(&o)["timing_ms"].is_u64());
}

#[test]
fn csv_dimension_table() {
    let o = lqt(&["verify", "lqt", "--config", "configs/lqt-k.json", "--csv"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("check,algebra,n,p,label,ok,key,value\n"));
    assert!(text.lines().any(|l| l.starts_with("lqt-level,k,3,") && l.ends_with(",h_dim,1")), "{text}");
}

#[test]
fn pro_h_unitality() {
    let o = lqt(&["hunital", "--pro", "configs/pro-nil3.json", "--rmax", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["degrees"].as_array().unwrap().iter().all(|d| d["decision"] == "ZERO"));
    let o = lqt(&["hunital", "--pro", "configs/pro-zero1.json", "--rmax", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verification_failure_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("zero.json");
    std::fs::write(&cfg, r#"{"algebras":["zero1"],"n_min":2,"n_max":2,"r_max":1}"#).unwrap();
    let o = lqt(&["verify", "lqt", "--config", cfg.to_str().unwrap()]);
    // the bookkeeping is consistent, so the sweep passes even though the map is not an isomorphism
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["checks"][0]["data"]["isomorphism"], false);
    std::fs::write(&cfg, r#"{"pro":{"system":"constant","algebra":"zero1","window":3},"n_min":2,"n_max":2}"#).unwrap();
    let o = lqt(&["verify", "lqt-pro", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("FAIL lqt-pro"));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"algebras\": [\"uv\"],\n \"n_max\": }").unwrap();
    let o = lqt(&["verify", "lqt", "--config", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("bad.json:2:"), "{err}");

    let o = lqt(&["homology", "--complex", "ce", "--algebra", "zero2", "-n", "7", "--max-degree", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("C(98,6)"));

    let o = lqt(&["verify", "phi-iso", "--config", "configs/small-sweep.json", "--max-basis", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("above the limit 10"));

    for args in [
        vec!["homology", "--complex", "ce", "--algebra", "k", "-n", "0", "--max-degree", "2"],
        vec!["verify", "bogus", "--config", "configs/uv.json"],
        vec!["verify", "lqt", "--config", "configs/uv.json", "--frobnicate"],
        vec!["verify", "lqt", "--config", "missing.json"],
        vec!["homology", "--complex", "cyclic", "--algebra", "nope", "--max-degree", "2"],
    ] {
        assert_eq!(lqt(&args).status.code(), Some(2), "{args:?}");
    }

    std::fs::write(&bad, r#"{"dim": 1, "basis": ["x"], "mult": [[0, 0, 3, "1"]]}"#).unwrap();
    let o = lqt(&["homology", "--complex", "bar", "--algebra", bad.to_str().unwrap(), "--max-degree", "1"]);
    assert_eq!(o.status.code(), Some(2));
}
