use std::process::Command;

use serde_json::{json, Value};

use hyperpoly::cli::run;

fn json_of(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["hyperpoly", "--format", "json"];
    full.extend_from_slice(args);
    let out = run(full);
    let v = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {:?}", out.stdout));
    (out.code, v)
}

#[test]
fn mult_golden() {
    let (code, v) = json_of(&["mult", "--field", "S", "--poly", "1,-1,-1,1", "--at", "1"]);
    assert_eq!(code, 0);
    assert_eq!(
        v,
        json!({
            "field": "S",
            "poly": "1,-1,-1,1",
            "report": {"chain": ["-1,-1,1", "1,1"], "element": "1", "method": "recursive", "multiplicity": 2}
        })
    );
}

#[test]
fn quotients_golden() {
    let (_, v) = json_of(&["quotients", "--field", "S", "--poly", "1,-1,-1,1", "--at", "1"]);
    assert_eq!(v["quotients"], json!(["-1,-1,1", "-1,0,1", "-1,1,1"]));
}

#[test]
fn roots_golden() {
    let (_, v) = json_of(&["roots", "--field", "W", "--poly", "1,1,1"]);
    assert_eq!(v["roots"], json!([{"mult": 2, "root": "1"}, {"mult": 2, "root": "-1"}]));
    assert_eq!(v["total"], json!(4));
}

#[test]
fn newton_golden_and_plot() {
    let dir = tempfile::tempdir().unwrap();
    let plot = dir.path().join("hull.dat");
    let (code, v) = json_of(&["newton", "--poly", "2,0,1,inf,-1,0", "--plot", plot.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        v["polygon"]["segments"],
        json!([{"length": 1, "s": "2"}, {"length": 3, "s": "1/3"}, {"length": 1, "s": "-1"}])
    );
    assert_eq!(v["roots"], json!(["-1", "1/3", "1/3", "1/3", "2"]));
    let text = std::fs::read_to_string(&plot).unwrap();
    let blocks: Vec<&str> = text.trim().split("\n\n").collect();
    assert_eq!(blocks.len(), 3);
    assert_eq!(blocks[0].lines().collect::<Vec<_>>(), ["0 2", "1 0"]);
}

#[test]
fn newton_prime_rule() {
    let (code, v) = json_of(&["newton", "--field", "Q", "--prime", "2", "--poly", "8,-14,7,-1", "--roots", "1,2,4"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["passed"], json!(true));
}

#[test]
fn descartes_golden() {
    let (_, v) = json_of(&["descartes", "--poly", "6,-7,0,1"]);
    assert_eq!(v["sign_image"], json!("1,-1,0,1"));
    assert_eq!(v["report"]["positive_roots"], json!(2));
    assert_eq!(v["report"]["negative_roots"], json!(1));
}

#[test]
fn hyperprod_groupings() {
    let polys = "(-1,1);(-1,1);(1,1)";
    let (_, left) = json_of(&["hyperprod", "--field", "S", "--polys", polys, "--assoc", "((1 2) 3)"]);
    let (_, right) = json_of(&["hyperprod", "--field", "S", "--polys", polys, "--assoc", "(1 (2 3))"]);
    assert_eq!(left["products"].as_array().map(Vec::len), Some(9), "{left}");
    assert_eq!(right["products"].as_array().map(Vec::len), Some(5), "{right}");
}

#[test]
fn isomorphism_golden() {
    let (_, v) = json_of(&["axioms", "--field", "quot:7:2", "--iso", "W"]);
    assert_eq!(v["iso"]["mapping"], json!(["[0]->0", "[1]->1", "[3]->-1"]));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_hyperpoly");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["roots", "--field", "S", "--poly", "1,1", "--at", "1"]), Some(0));
    assert_eq!(code(&["roots", "--field", "S", "--poly", "1,2"]), Some(2));
    assert_eq!(code(&["roots", "--field", "Z", "--poly", "1"]), Some(2));
    assert_eq!(code(&["quotients", "--field", "T", "--poly", "0,0", "--at", "0"]), Some(1));
    assert_eq!(code(&["mult", "--field", "P", "--poly", "1,1", "--at", "e^1/2"]), Some(1));
    assert_eq!(code(&["bogus"]), Some(2));
}

#[test]
fn json_errors_carry_codes() {
    let out = run(["hyperpoly", "--format", "json", "roots", "--field", "S", "--poly", "1,7"]);
    assert_eq!(out.code, 2);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v["error"].is_string());
}

#[test]
fn trailing_zeros_warn() {
    let out = run(["hyperpoly", "roots", "--field", "S", "--poly", "1,-1,0"]);
    assert_eq!(out.code, 0);
    assert!(out.stderr.contains("trailing"), "{:?}", out.stderr);
}

#[test]
fn verify_suites_pass() {
    for suite in ["signs", "descartes", "newton", "tropical"] {
        let out = run(["hyperpoly", "verify", "--suite", suite, "--count", "20"]);
        assert_eq!(out.code, 0, "{suite}: {}", out.stdout);
    }
    let out = run(["hyperpoly", "verify", "--hom", "padic:3"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
}
