use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn tdpair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tdpair")).args(args).output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, v: &Value) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, serde_json::to_string(v).unwrap()).unwrap();
    path
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn p0() -> Value {
    json!({"field": {"kind": "Q"}, "theta": ["1", "0", "-1"], "thetastar": ["1", "0", "-1"], "varphi": "2", "phi": "1"})
}

#[test]
fn report_p0() {
    let dir = TempDir::new().unwrap();
    let pa = write(&dir, "p0.json", &p0());
    let out = tdpair(&["report", s(&pa)]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    let d = &doc["derived_params"];
    assert_eq!(
        [&d["varphi1"], &d["varphi2"], &d["phi1"], &d["phi2"]],
        [&json!("-5/4"), &json!("-5/4"), &json!("3/4"), &json!("3/4")]
    );
    assert_eq!(doc["cross_check"], true);
    assert!(doc.get("transitions").is_none());
}

#[test]
fn report_full_to_file_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let pa = write(&dir, "p0.json", &p0());
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert_eq!(tdpair(&["report", s(&pa), "--full", "--out", s(&a)]).status.code(), Some(0));
    assert_eq!(tdpair(&["report", s(&pa), "--full", "--out", s(&b)]).status.code(), Some(0));
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    let doc: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(doc["transitions"].as_array().unwrap().len(), 30);
    assert_eq!(doc["representations"].as_array().unwrap().len(), 12);
    assert_eq!(doc["bases"]["SplitZD"], json!([["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]));
}

#[test]
fn report_inadmissible() {
    let dir = TempDir::new().unwrap();
    let mut v = p0();
    v["theta"] = json!(["1", "1", "-1"]);
    let pa = write(&dir, "bad.json", &v);
    let out = tdpair(&["report", s(&pa)]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout_json(&out)["admissibility"]["failed"], json!(["(i)"]));
}

#[test]
fn report_io_and_parse_errors() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(tdpair(&["report", s(&missing)]).status.code(), Some(1));
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{not json").unwrap();
    assert_eq!(tdpair(&["report", s(&garbage)]).status.code(), Some(1));
    let mut v = p0();
    v["field"] = json!({"kind": "Fp", "p": 9});
    let composite = write(&dir, "composite.json", &v);
    assert_eq!(tdpair(&["report", s(&composite)]).status.code(), Some(1));
}

#[test]
fn construct_then_verify() {
    let dir = TempDir::new().unwrap();
    let pa = write(&dir, "p0.json", &p0());
    let sys = dir.path().join("sys.json");
    assert_eq!(tdpair(&["construct", s(&pa), "--out", s(&sys)]).status.code(), Some(0));

    let out = tdpair(&["verify", s(&sys)]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["report"]["shape"], json!([1, 2, 1]));
    assert_eq!(doc["report"]["overall"], true);

    // Without orderings the verifier has to find them itself.
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&sys).unwrap()).unwrap();
    let obj = v.as_object_mut().unwrap();
    obj.remove("theta");
    obj.remove("thetastar");
    let bare = write(&dir, "bare.json", &v);
    let out = tdpair(&["verify", s(&bare)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["report"]["shape"], json!([1, 2, 1]));
}

#[test]
fn verify_identity_pair_fails() {
    let dir = TempDir::new().unwrap();
    let id = json!([["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]);
    let sys = write(&dir, "id.json", &json!({"field": {"kind": "Q"}, "A": id, "Astar": id}));
    let out = tdpair(&["verify", s(&sys)]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stdout_json(&out)["report"]["overall"], false);
}

#[test]
fn verify_boundary_reports_witness() {
    let dir = TempDir::new().unwrap();
    // θ = θ* = (1,0,-1), φ = 1, ϕ = 9 gives φ1 = φ2 = 1 = φ.
    let boundary = json!({"field": {"kind": "Q"}, "theta": ["1", "0", "-1"], "thetastar": ["1", "0", "-1"], "varphi": "1", "phi": "9"});
    let pa = write(&dir, "boundary.json", &boundary);
    assert_eq!(tdpair(&["construct", s(&pa), "--out", s(&dir.path().join("x.json"))]).status.code(), Some(2));

    // Build the canonical matrices directly; construct refuses the array.
    let a = json!([["1", "0", "0", "0"], ["1", "0", "0", "0"], ["0", "0", "0", "0"], ["0", "1", "1", "-1"]]);
    let astar = json!([["1", "1", "1", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "1"], ["0", "0", "0", "-1"]]);
    let sys = write(
        &dir,
        "sys.json",
        &json!({"field": {"kind": "Q"}, "A": a, "Astar": astar, "theta": ["1", "0", "-1"], "thetastar": ["1", "0", "-1"]}),
    );
    let out = tdpair(&["verify", s(&sys)]);
    assert_eq!(out.status.code(), Some(3));
    let report = &stdout_json(&out)["report"];
    assert_eq!(report["failed"], json!(["(vi)"]));
    assert_eq!(report["witness"], json!([["0", "1", "-1", "0"]]));
}

#[test]
fn enumerate_small_primes() {
    let out = tdpair(&["enumerate", "--p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["admissible"], 0);

    let out = tdpair(&["enumerate", "--p", "3", "--orbits"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["admissible"], 108);
    assert_eq!(doc["orbits"]["count"], 18);
    assert_eq!(doc["orbits"]["total"], 108);
}

#[test]
fn enumerate_guard() {
    assert_eq!(tdpair(&["enumerate", "--p", "11"]).status.code(), Some(1));
    assert_eq!(tdpair(&["enumerate", "--p", "4"]).status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_tdpair"))
        .args(["enumerate", "--p", "3"])
        .env("TDP_MAX_GRID", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
