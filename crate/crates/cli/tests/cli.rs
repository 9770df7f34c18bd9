use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::tempdir;

const R4_S2_TABLE: &str = "\
1  .  .  .  .  . . 
. 16 47 63 46 18 3 
.  2  9 16 14  6 1 
.  1  5 10 10  5 1 
.  1  4  6  4  1 . 
";

fn lexseg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lexseg"))
        .args(args)
        .output()
        .expect("failed to run lexseg")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = lexseg(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn code(args: &[&str]) -> i32 {
    lexseg(args).status.code().expect("terminated by signal")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_prints_table() {
    let text = ok(&["construct", "--r", "4", "--s", "2"]);
    assert!(text.contains(R4_S2_TABLE), "{text}");
    assert!(text.contains("consistent: true"));
    assert!(text.contains("h(t) measured:  1 + 5*t - 1*t^2"));
}

#[test]
fn construct_rejects_zero_parameters() {
    assert_eq!(code(&["construct", "--r", "0", "--s", "2"]), 2);
    assert_eq!(code(&["construct", "--r", "3", "--s", "0"]), 2);
}

#[test]
fn construct_writes_ideal_file() {
    let dir = tempdir().unwrap();
    let file = dir.path().join("i.json");
    ok(&["construct", "--r", "1", "--s", "1", "--out", path(&file)]);
    assert_eq!(
        fs::read_to_string(&file).unwrap(),
        "{\"n\": 1, \"generators\": [[2]]}\n"
    );
}

#[test]
fn construct_json_reports_invariants() {
    let text = ok(&["construct", "--r", "2", "--s", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let report = &v["report"];
    assert_eq!(report["measured"]["reg"], 2);
    assert_eq!(report["measured"]["h_degree"], 5);
    assert_eq!(report["measured"], report["predicted"]);
    assert_eq!(report["lexsegment"], true);
    assert_eq!(v["betti"]["reg"], 2);
}

#[test]
fn analyze_fixture() {
    let text = ok(&["analyze", "--fixture", "dim2-reg6"]);
    for line in ["dim: 2", "depth: 0", "reg: 6", "h-degree: 1", "lexsegment: true"] {
        assert!(text.lines().any(|l| l == line), "missing {line:?} in\n{text}");
    }
}

#[test]
fn analyze_unknown_fixture_is_usage_error() {
    assert_eq!(code(&["analyze", "--fixture", "nope"]), 2);
}

#[test]
fn analyze_json_round_trips() {
    let dir = tempdir().unwrap();
    let first = ok(&["analyze", "--fixture", "r4-s2", "--format", "json"]);
    let file = dir.path().join("a.json");
    fs::write(&file, &first).unwrap();
    let second = ok(&["analyze", path(&file), "--format", "json"]);
    assert_eq!(first, second);
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["reg"], 4);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["h_polynomial"], serde_json::json!([1, 5, -1]));
}

#[test]
fn analyze_unstable_ideal() {
    let dir = tempdir().unwrap();
    let file = dir.path().join("i.json");
    // not stable, so the Koszul oracle supplies the Betti numbers
    fs::write(&file, "{\"n\": 3, \"generators\": [[1,1,0], [0,1,1], [1,0,1]]}").unwrap();
    let text = ok(&["analyze", path(&file)]);
    assert!(text.contains("stable: false"), "{text}");
    assert!(text.contains("reg: 1"));
    assert!(text.contains("depth: 1"));
}

#[test]
fn analyze_zero_ideal() {
    let dir = tempdir().unwrap();
    let file = dir.path().join("z.json");
    fs::write(&file, "{\"n\": 2, \"generators\": []}").unwrap();
    let text = ok(&["analyze", path(&file)]);
    assert!(text.lines().any(|l| l == "reg: 0"), "{text}");
    assert!(text.lines().any(|l| l == "dim: 2"), "{text}");
}

#[test]
fn analyze_unit_ideal_is_domain_error() {
    let dir = tempdir().unwrap();
    let file = dir.path().join("u.json");
    fs::write(&file, "{\"n\": 2, \"generators\": [[0,0]]}").unwrap();
    assert_eq!(code(&["analyze", path(&file)]), 3);
}

#[test]
fn analyze_malformed_input_is_usage_error() {
    let dir = tempdir().unwrap();
    let file = dir.path().join("bad.json");
    fs::write(&file, "{\"n\": 2, \"generators\": [[1]]}").unwrap();
    assert_eq!(code(&["analyze", path(&file)]), 2);
    assert_eq!(code(&["analyze", path(&dir.path().join("missing.json"))]), 2);
}

#[test]
fn lexify_reproduces_construction() {
    let dir = tempdir().unwrap();
    let spec = dir.path().join("s.json");
    let out = dir.path().join("i.json");
    fs::write(&spec, "{\"initial\": [1, 6], \"tail\": {\"constant\": 5}}").unwrap();
    ok(&["lexify", path(&spec), "--n", "6", "--out", path(&out)]);
    let built = ok(&["construct", "--r", "4", "--s", "2", "--format", "json"]);
    let built: serde_json::Value = serde_json::from_str(&built).unwrap();
    let ours: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(ours["generators"], built["ideal"]["generators"]);
}

#[test]
fn lexify_rejects_non_o_sequence() {
    let dir = tempdir().unwrap();
    let spec = dir.path().join("s.json");
    fs::write(&spec, "{\"initial\": [1, 2, 4], \"tail\": \"max-growth\"}").unwrap();
    let out = lexseg(&["lexify", path(&spec), "--n", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree 1"));
}

#[test]
fn lexify_full_ring_gives_zero_ideal() {
    let dir = tempdir().unwrap();
    let spec = dir.path().join("s.json");
    fs::write(&spec, "{\"initial\": [1], \"tail\": {\"constant\": 1}}").unwrap();
    let text = ok(&["lexify", path(&spec), "--n", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["generators"], serde_json::json!([]));
    assert_eq!(v["hilbert_function"], serde_json::json!([1, 1, 1, 1, 1]));
}

#[test]
fn expansion() {
    let text = ok(&["expansion", "--a", "5", "--d", "4"]);
    assert!(text.contains("5 = C(5,4)"), "{text}");
    assert!(text.contains("5^<4> = 6"), "{text}");
    assert!(ok(&["expansion", "--a", "0", "--d", "4"]).contains("0^<4> = 0"));
    assert_eq!(code(&["expansion", "--a", "5", "--d", "0"]), 2);
}

#[test]
fn betti_oracle_agrees() {
    let dir = tempdir().unwrap();
    let file = dir.path().join("i.json");
    ok(&["construct", "--r", "2", "--s", "1", "--out", path(&file)]);
    let ek = ok(&["betti", path(&file)]);
    let oracle = ok(&["betti", path(&file), "--oracle"]);
    assert_eq!(ek, oracle);
}

#[test]
fn betti_r4_s2_matches_table() {
    let dir = tempdir().unwrap();
    let file = dir.path().join("i.json");
    ok(&["construct", "--r", "4", "--s", "2", "--out", path(&file)]);
    assert_eq!(ok(&["betti", path(&file)]), R4_S2_TABLE);
}

#[test]
fn verify_grid() {
    let text = ok(&["verify-grid", "--rmax", "3", "--smax", "3"]);
    assert!(text.contains("9 / 9 passed"), "{text}");
    let text = ok(&["verify-grid", "--rmax", "1", "--smax", "1", "--oracle"]);
    assert!(text.contains("ok*"), "{text}");
    assert_eq!(code(&["verify-grid", "--rmax", "0", "--smax", "1"]), 2);
}

#[test]
fn selfcheck_is_seeded() {
    let a = ok(&["selfcheck", "--seed", "11", "--count", "10"]);
    let b = ok(&["selfcheck", "--seed", "11", "--count", "10"]);
    assert_eq!(a, b);
    assert!(a.contains("10 / 10 agree"), "{a}");
}
