use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn switchsep(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_switchsep")).current_dir(dir).args(args).output().expect("spawn")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    std::fs::write(dir.path().join(name), text).unwrap();
    name.to_string()
}

#[test]
fn family_output_feeds_graph_commands() {
    let dir = TempDir::new().unwrap();
    let gen = switchsep(dir.path(), &["family", "gen", "--n", "5", "--q", "2", "--out", "g.json"]);
    assert_eq!(gen.status.code(), Some(0));
    let sep = switchsep(dir.path(), &["graph", "separable", "--graph", "g.json"]);
    assert_eq!(sep.status.code(), Some(0));
    assert_eq!(json_of(&sep)["separable"], Value::Bool(false));
    let crit = switchsep(dir.path(), &["graph", "critical", "--graph", "g.json"]);
    assert_eq!(json_of(&crit)["critical"], Value::Bool(true));
    let verify = switchsep(dir.path(), &["family", "verify", "--n", "7", "--q", "4", "--gamma", "1"]);
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn separable_set_certificate_round_trip() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.json", r#"{"q": 3, "n": 4, "edges": [[0, 1, 1], [2, 3, 2]]}"#);
    let out = switchsep(dir.path(), &["graph", "separable", "--graph", &g, "--set", "0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["separable"], Value::Bool(true));
    let labels: Vec<u32> = serde_json::from_value(v["certificate"]["labels"].clone()).unwrap();
    let joined: Vec<String> = labels.iter().map(u32::to_string).collect();
    let switched = switchsep(dir.path(), &["graph", "switch", "--graph", &g, "--labels", &joined.join(","), "--out", "s.json"]);
    assert_eq!(switched.status.code(), Some(0));
    let s: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("s.json")).unwrap()).unwrap();
    // no edge across {0,1} | {2,3} after switching
    for e in s["edges"].as_array().unwrap() {
        let (u, v) = (e[0].as_u64().unwrap(), e[1].as_u64().unwrap());
        assert_eq!(u < 2, v < 2, "{e}");
    }
}

#[test]
fn census_reports_do_not_depend_on_jobs() {
    let dir = TempDir::new().unwrap();
    let one = switchsep(dir.path(), &["census", "critical", "--q", "2", "--n", "5", "--jobs", "1"]);
    let many = switchsep(dir.path(), &["census", "critical", "--q", "2", "--n", "5", "--jobs", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(json_of(&one)["critical_classes"].as_array().unwrap().len(), 12);
    let odd = switchsep(dir.path(), &["census", "critical", "--q", "3", "--n", "5"]);
    assert_eq!(json_of(&odd)["critical_classes"], Value::Array(vec![]));
}

#[test]
fn sampled_checks_are_seeded() {
    let dir = TempDir::new().unwrap();
    let args = ["census", "check", "--name", "allsep", "--q", "3", "--n", "7", "--samples", "300", "--seed", "9"];
    let a = switchsep(dir.path(), &args);
    let b = switchsep(dir.path(), &[&args[..], &["--jobs", "2"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    assert_eq!(v["graphs_scanned"], 300);
    assert_eq!(v["seed"], 9);
}

#[test]
fn function_and_quasigroup_pipeline() {
    let dir = TempDir::new().unwrap();
    let p = write(
        &dir,
        "p.json",
        r#"{"q": 3, "nvars": 4, "terms": [{"exps": [1, 1, 0, 0], "coef": 2}, {"exps": [0, 0, 1, 1], "coef": 1}]}"#,
    );
    let graph = json_of(&switchsep(dir.path(), &["fn", "graph", "--poly", &p]));
    assert_eq!(graph["n"], 4);
    let reduced = switchsep(dir.path(), &["fn", "reduce", "--poly", &p, "--a", "1", "--out", "r.json"]);
    assert_eq!(reduced.status.code(), Some(0));
    let built = switchsep(dir.path(), &["qg", "build", "--fn", "r.json", "--a", "1", "--out", "t.json"]);
    assert_eq!(built.status.code(), Some(0), "{}", String::from_utf8_lossy(&built.stderr));
    let check = switchsep(dir.path(), &["qg", "check", "--table", "t.json"]);
    assert_eq!(check.status.code(), Some(0));
    let graph_side = json_of(&switchsep(dir.path(), &["fn", "separable", "--poly", &p, "--a", "1"]));
    let qg_side = json_of(&switchsep(dir.path(), &["qg", "separable", "--table", "t.json"]));
    assert_eq!(graph_side["separable"], qg_side["separable"]);
    let r = switchsep(dir.path(), &["qg", "retract", "--table", "t.json", "--position", "2", "--element", "4"]);
    assert_eq!(json_of(&r)["n"], 2);
    let inv = switchsep(dir.path(), &["qg", "invert", "--table", "t.json", "--position", "1", "--out", "i.json"]);
    assert_eq!(inv.status.code(), Some(0));
    let back = switchsep(dir.path(), &["qg", "invert", "--table", "i.json", "--position", "1", "--out", "b.json"]);
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(std::fs::read(dir.path().join("b.json")).unwrap(), std::fs::read(dir.path().join("t.json")).unwrap());
}

#[test]
fn verification_commands_pass() {
    let dir = TempDir::new().unwrap();
    let prop = switchsep(dir.path(), &["qg", "verify-prop5", "--q", "3", "--n", "3", "--count", "5", "--seed", "1"]);
    assert_eq!(prop.status.code(), Some(0));
    assert_eq!(json_of(&prop)["disagreements"], 0);
    let cor = switchsep(dir.path(), &["qg", "verify-cor7", "--n", "4", "--count", "3"]);
    assert_eq!(cor.status.code(), Some(0));
}

#[test]
fn bad_input_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"q": 3, "n": 3, "edges": [[0, 1, 5]]}"#);
    assert_eq!(switchsep(dir.path(), &["graph", "sets", "--graph", &bad]).status.code(), Some(2));
    assert_eq!(switchsep(dir.path(), &["graph", "sets", "--graph", "missing.json"]).status.code(), Some(2));
    assert_eq!(switchsep(dir.path(), &["census", "check", "--name", "nope", "--q", "2", "--n", "5"]).status.code(), Some(2));
    assert_eq!(switchsep(dir.path(), &["family", "gen", "--n", "6", "--q", "2"]).status.code(), Some(2));
    assert_eq!(switchsep(dir.path(), &["census", "critical", "--q", "2"]).status.code(), Some(2));
    assert_eq!(switchsep(dir.path(), &[]).status.code(), Some(2));
}

#[test]
fn version_prints_the_pins() {
    let out = switchsep(Path::new("."), &["--version"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let pins = v["pinned"].as_array().unwrap();
    assert!(pins.iter().any(|p| p["q"] == 2 && p["n"] == 5 && p["classes"] == 64 && p["critical_classes"] == 12));
}

#[test]
fn library_entry_point_matches_binary() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("lib.json");
    let code = switchsep::cli::run(["switchsep", "family", "gen", "--n", "5", "--q", "4", "--gamma", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let bin = switchsep(dir.path(), &["family", "gen", "--n", "5", "--q", "4", "--gamma", "1"]);
    assert_eq!(std::fs::read(out).unwrap(), bin.stdout);
}
