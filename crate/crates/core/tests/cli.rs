//! The `gkcut` binary: outputs validate against the published schemas,
//! reruns are byte-identical, and exit codes follow the documented rules.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn schema_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas")
}

fn gkcut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkcut"))
        .args(args)
        .output()
        .unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn assert_valid(schema: &str, v: &Value) {
    let text = std::fs::read_to_string(schema_dir().join(schema)).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator
        .iter_errors(v)
        .map(|e| format!("{} at {}", e, e.instance_path()))
        .collect();
    assert!(errors.is_empty(), "{errors:?}\n{v}");
}

fn temp(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gkcut-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn gk_and_classify() {
    let out = gkcut(&["gk", "DP(MM,SD(Cyc(7),Cyc(3),pow=2))"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_valid("gk-graph.schema.json", &v);
    assert_eq!(
        v,
        serde_json::json!({"vertices": [2, 3, 5, 7], "edges": [[2, 3], [2, 7], [3, 5], [5, 7]]})
    );

    let out = gkcut(&["gk", "MM", "--dot"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(
        dot.starts_with("graph GK {")
            && dot.contains("2;")
            && dot.contains("5;")
            && !dot.contains("--")
    );

    for spec in ["MM", "Alt(5)", "Wr(Cyc(2),Sym(3))"] {
        let out = gkcut(&["classify", spec]);
        assert!(out.status.success());
        assert_valid("classification.schema.json", &json_of(&out));
    }
    let v = json_of(&gkcut(&["classify", "MM"]));
    assert_eq!(
        (v["order"].as_u64(), v["rational"].as_bool()),
        (Some(200), Some(true))
    );
    assert_eq!(
        (v["cut"].as_bool(), v["solvable"].as_bool()),
        (Some(true), Some(true))
    );
}

#[test]
fn rationality_command() {
    let out = gkcut(&["rationality", "Dih(10)", "--element", "g0"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_valid("rationality.schema.json", &v);
    assert_eq!(v["order"], 5);
    assert_eq!(v["is_real"], true);
    assert_eq!(v["is_rational"], false);
    assert_eq!(v["is_inverse_semi_rational"], false);
    let v = json_of(&gkcut(&["rationality", "Alt(5)", "--element", "g0*g1"]));
    assert_eq!(
        (v["order"].as_u64(), v["is_inverse_semi_rational"].as_bool()),
        (Some(5), Some(false))
    );
    // a 3-cycle of Alt(4) is not real, but its only other generator is its inverse
    let v = json_of(&gkcut(&["rationality", "Alt(4)", "--element", "g0"]));
    assert_eq!(v["is_real"], false);
    assert_eq!(v["is_inverse_semi_rational"], true);
}

#[test]
fn verify_and_exit_codes() {
    let pass = temp("pass.json", r#"{"subject": "Alt(4)", "params": {"p": 3}}"#);
    let out = gkcut(&[
        "verify",
        "L-2.5-GSylowp",
        "--instance",
        pass.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_valid("check-report.schema.json", &v);
    assert_eq!(v["status"], "pass");

    let fail = temp(
        "fail.json",
        r#"{"lemma_id": "L-3.1-CutOrders(4)", "subject": "Cyc(12)", "params": {"conclusion_only": true}}"#,
    );
    let out = gkcut(&[
        "verify",
        "L-3.1-CutOrders(4)",
        "--instance",
        fail.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_valid("check-report.schema.json", &v);
    assert_eq!(v["status"], "FAIL");

    let out = gkcut(&[
        "verify",
        "L-2.5-GSylowp",
        "--instance",
        fail.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["kind"], "InvalidInstance");

    let out = gkcut(&[
        "verify",
        "L-9.9-Nothing",
        "--instance",
        pass.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["kind"], "UnknownLemma");
}

#[test]
fn errors_are_json() {
    for (args, kind) in [
        (vec!["gk", "DP(MM"], "SyntaxError"),
        (vec!["gk", "Dih(7)"], "SemanticError"),
        (vec!["gk", "Sym(12)"], "BoundExceeded"),
        (vec!["--bound", "100", "classify", "MM"], "BoundExceeded"),
        (vec!["rationality", "MM", "--element", "g7"], "InvalidWord"),
        (vec!["catalog", "--file", "/nonexistent/catalog.txt"], "Io"),
        (vec!["frobnicate"], "Usage"),
    ] {
        let out = gkcut(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let v = json_of(&out);
        assert_valid("error.schema.json", &v);
        assert_eq!(v["error"]["kind"], kind, "{args:?}: {v}");
    }
    let v = json_of(&gkcut(&["gk", "DP(MM"]));
    assert!(v["error"]["message"].as_str().unwrap().contains("1:7"));
}

#[test]
fn catalog_runs_are_reproducible() {
    let cat = temp(
        "small.txt",
        "# small\nSym(3)\nMM\nAlt(5)\nSD(Cyc(7),Cyc(3),pow=2)\n",
    );
    let path = cat.to_str().unwrap();
    let a = gkcut(&["catalog", "--file", path]);
    let b = gkcut(&["catalog", "--file", path]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    assert_valid("catalog-report.schema.json", &v);
    assert_eq!(v["summary"]["groups"], 4);
    assert!(v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r.get("runtime_ms").is_none()));

    let c = gkcut(&["--seed", "7", "catalog", "--file", path]);
    assert_ne!(json_of(&c)["run_id"], v["run_id"]);

    let timed = json_of(&gkcut(&[
        "--timing", "catalog", "--file", path, "--lemmas", "L-3.1",
    ]));
    assert!(timed["reports"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["runtime_ms"].is_u64()));

    let out_path =
        std::env::temp_dir().join(format!("gkcut-cli-{}/report.json", std::process::id()));
    let d = gkcut(&[
        "catalog",
        "--file",
        path,
        "--json",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(std::fs::read(&out_path).unwrap(), d.stdout);
}

#[test]
fn default_catalog_and_scans() {
    let out = gkcut(&["catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_valid("catalog-report.schema.json", &v);
    assert_eq!(v["summary"]["FAIL"], 0);

    let out = gkcut(&["realizability"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_valid("realizability.schema.json", &v);
    assert_eq!(v["main_witnessed"], true);

    let s9 = temp("s9.txt", "Sym(9)\n");
    let v = json_of(&gkcut(&["realizability", "--file", s9.to_str().unwrap()]));
    assert_eq!(v["flagged"][0]["named"], "t");
    assert_eq!(v["flagged"][0]["note"], "rational, not solvable");

    let out = gkcut(&["explicit"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_valid("check-report.schema.json", &v);
    assert_eq!(v["evidence"]["matrix_group_order"], 252);
}

#[test]
fn instance_schema_accepts_shipped_instances() {
    let text = std::fs::read_to_string(schema_dir().join("lemma-instance.schema.json")).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for inst in gkcut::lab::default_catalog().instances {
        let v = serde_json::to_value(&inst).unwrap();
        assert!(validator.is_valid(&v), "{v}");
    }
    assert!(!validator.is_valid(&serde_json::json!({"subject": "MM", "params": {"bogus": 1}})));
}
