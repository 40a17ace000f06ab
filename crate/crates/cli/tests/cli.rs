use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bicross(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicross")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_presets() {
    assert_eq!(code(&bicross(&["verify", "h4"])), 0);
    for spec in ["kc2", "h4xh4", "h16:3", "double", "dual:h4"] {
        assert_eq!(code(&bicross(&["--field", "Fp:5", "verify", spec])), 0, "{spec}");
    }
    let o = bicross(&["verify", "h16", "--lambda", "-1/2", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["passed"], true);
}

#[test]
fn corrupted_antipode_fails_with_the_axiom_named() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("e.json");
    assert_eq!(code(&bicross(&["--prime", "5", "bicross", "trivial", "--out", path(&file)])), 0);

    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    let n = doc["dim"].as_u64().unwrap() as usize;
    doc["antipode"] = Value::Array(
        (0..n).map(|i| Value::Array((0..n).map(|j| Value::from(if i == j { "1" } else { "0" })).collect())).collect(),
    );
    std::fs::write(&file, serde_json::to_string(&doc).unwrap()).unwrap();

    let o = bicross(&["verify", path(&file)]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    assert!(text.contains("FAIL  antipode"), "{text}");
    assert!(text.contains("pass  associativity"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"field\": \"Q\", \"dim\": 2}").unwrap();
    for args in [
        vec!["verify", "nonsense"],
        vec!["--field", "Fp:2", "verify", "h4"],
        vec!["--field", "R", "verify", "h4"],
        vec!["verify", path(&bad)],
        vec!["verify", "h16"],
        vec!["iso", "trivial", "canonical:1"],
        vec!["mp", "census"],
        vec!["--prime", "11", "mp", "census"],
        vec!["frobnicate"],
    ] {
        assert_eq!(code(&bicross(&args)), 2, "{args:?}");
    }
}

#[test]
fn pair_files_round_trip_and_corruption_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("pair.json");
    let o = bicross(&["--prime", "5", "mp", "canonical", "--lambda", "2", "--out", path(&file)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("x ⊳ X = 2 + 3*G"), "{}", stdout(&o));
    assert_eq!(code(&bicross(&["mp", "check", path(&file)])), 0);
    assert_eq!(code(&bicross(&["bicross", path(&file)])), 0);

    // drop a term of x ⊳ X
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    let left = doc["left"].as_array_mut().unwrap();
    let idx = left.iter().position(|e| e[0] == 2 && e[1] == 2).unwrap();
    left.remove(idx);
    std::fs::write(&file, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = bicross(&["mp", "check", path(&file), "--json"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["passed"], false);
    assert_eq!(code(&bicross(&["bicross", path(&file)])), 1);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--prime", "3", "bicross", "canonical:1", "--json"];
    let (a, b) = (bicross(&args), bicross(&args));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let args = ["--prime", "3", "aut", "canonical:0", "--json"];
    assert_eq!(bicross(&args).stdout, bicross(&args).stdout);
}

#[test]
fn probe_and_aut() {
    let o = bicross(&["--prime", "5", "probe", "h4", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["group_likes"], serde_json::json!(["1", "g"]));
    assert_eq!(v["unimodular"], false);
    assert_eq!(v["skew_primitives"][0]["basis"], serde_json::json!(["1 + 4*g", "x"]));

    let o = bicross(&["--prime", "5", "aut", "canonical:1", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["group"]["order"], 8);
    assert_eq!(v["group"]["abelian"], false);

    let o = bicross(&["--prime", "3", "iso", "canonical:2", "h16:1", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["isomorphic"], true);
}

#[test]
fn double_against_h16_1() {
    let o = bicross(&["--prime", "3", "double", "h4", "--against", "canonical:1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("≅ canonical:1 ⋈: true"));
}

#[test]
fn reproduce_f3() {
    let o = bicross(&["reproduce", "--prime", "3", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["matched_pairs"], 4);
    assert_eq!(v["iso_classes"], 3);
    assert_eq!(v["aut_orders"], serde_json::json!({"tensor": 8, "h16_0": 8, "h16_1": 4}));
    assert_eq!(v["double_is_h16_1"], true);
}

#[test]
fn reproduce_f5() {
    let o = bicross(&["reproduce", "--prime", "5", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["matched_pairs"], 6);
    assert_eq!(v["iso_classes"], 3);
    assert_eq!(v["aut_orders"], serde_json::json!({"tensor": 32, "h16_0": 32, "h16_1": 8}));
    assert_eq!(v["double_is_h16_1"], true);
}
