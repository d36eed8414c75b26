use std::process::{Command, Output};

use serde_json::Value;

fn subword(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subword")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = subword(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (v, out.status.code().unwrap())
}

fn facet_strings(v: &Value) -> Vec<Vec<String>> {
    serde_json::from_value(v["complex"]["facets"].clone()).unwrap()
}

fn s(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
}

#[test]
fn roots_counts() {
    let (v, code) = json(&["roots", "A2"]);
    assert_eq!(code, 0);
    assert_eq!(v["roots"].as_array().unwrap().len(), 6);
    assert_eq!(v["roots"][2]["root"], serde_json::json!([1, 1]));
    assert_eq!(json(&["roots", "A1"]).0["roots"].as_array().unwrap().len(), 2);
    assert_eq!(json(&["roots", "I2(7)"]).0["roots"].as_array().unwrap().len(), 14);
    let (v, _) = json(&["roots", "H3"]);
    assert!(v["roots"].as_array().unwrap().iter().any(|r| r["root"].to_string().contains("phi")));
}

#[test]
fn complex_pentagon_and_square() {
    let (v, code) = json(&["complex", "A2", "--c", "1 2", "--wo", "sorting:1 2"]);
    assert_eq!(code, 0);
    assert_eq!(facet_strings(&v), s(&[&["1", "2"], &["1", "5"], &["2", "3"], &["3", "4"], &["4", "5"]]));
    assert_eq!(v["f_vector"], serde_json::json!([5, 5]));
    assert_eq!(v["spherical"], true);
    assert_eq!(v["flag"], true);
    let (v, _) = json(&["complex", "A2", "--c", "1 2", "--wo", "rev"]);
    assert_eq!(facet_strings(&v), s(&[&["1", "2"], &["1", "3"], &["2", "5"], &["3", "5"]]));
    assert_eq!(v["unused_positions"], serde_json::json!([4]));
    let (v, _) = json(&["complex", "A1", "--c", "1"]);
    assert_eq!(facet_strings(&v), s(&[&["1"], &["2"]]));
}

#[test]
fn stable_examples() {
    let (v, _) = json(&["stable", "A2", "--c", "1 2", "--wo", "1 2 1"]);
    assert_eq!(v["stable"].as_array().unwrap().len(), 3);
    let (v, _) = json(&["stable", "A2", "--c", "1 2", "--wo", "2 1 2"]);
    assert_eq!(v["stable"], serde_json::json!([[1, 0], [0, 1]]));
    assert_eq!(v["unstable"], serde_json::json!([[1, 1]]));
    let (v, _) = json(&["stable", "A1", "--c", "1", "--wo", "1"]);
    assert_eq!(v["stable"], serde_json::json!([[1]]));
}

#[test]
fn verify_commands() {
    let (v, code) = json(&["verify", "thm1", "A3", "--c", "1 2 3", "--c2", "3 2 1"]);
    assert_eq!((v["verdict"].as_str().unwrap(), code), ("holds", 0));
    assert_eq!(v["witness"]["kind"], "isomorphism");
    assert_eq!(v["inputs"]["erased_type"], "A1xA1xA1");
    let (v, code) = json(&["verify", "cor1", "A2", "--c", "1 2", "--wo", "2 1 2"]);
    assert_eq!((v["verdict"].as_str().unwrap(), code), ("holds", 0));
    assert_eq!(v["witness"]["depth"], 0);
    assert_eq!(v["witness"]["flag"], true);
    let (v, _) = json(&["verify", "thm2ii", "A2", "--c", "1 2", "--wo", "2 1 2", "--wo2", "2 1 2"]);
    assert_eq!(v["witness"]["certificate"]["steps"].as_array().unwrap().len(), 0);
    let (v, _) = json(&["verify", "thm2ii", "A2", "--c", "1 2", "--wo", "1 2 1", "--wo2", "2 1 2"]);
    assert_eq!(v["verdict"], "not_applicable");
    let (v, _) = json(&["verify", "thm2i", "A2", "--c", "1 2", "--wo", "2 1 2"]);
    assert_eq!(v["witness"]["positions"].as_object().unwrap().len(), 4);
}

#[test]
fn scan_and_exit_codes() {
    let (v, code) = json(&["scan", "A2", "--all"]);
    assert_eq!(code, 0);
    assert_eq!((v["coxeter_elements"].as_u64(), v["reduced_words"].as_u64()), (Some(2), Some(2)));
    let (v, code) = json(&["scan", "B2", "--all", "--summary-only"]);
    assert_eq!(code, 0);
    assert_eq!(v["reduced_words"], 2);
    assert!(v["reports"].as_array().unwrap().is_empty());
    assert_eq!(json(&["scan", "A1", "--all"]).1, 0);
    let (v, code) = json(&["scan", "A3", "--claims", "thm2i,cor1", "--sequential"]);
    assert_eq!(code, 0);
    assert_eq!(v["counts"]["thm2i"]["holds"], 64);
}

#[test]
fn exhausted_budget_is_unknown() {
    let out = subword(&["verify", "cor1", "B3", "--c", "1 2 3", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("unknown"));
    let out = Command::new(env!("CARGO_BIN_EXE_subword"))
        .args(["verify", "cor1", "B3", "--c", "1 2 3"])
        .env("SUBWORD_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn input_errors_exit_one() {
    for args in [
        &["roots", "X9"][..],
        &["roots", "D3"],
        &["complex", "A2", "--c", "1 1"],
        &["complex", "A2", "--c", "1 2", "--wo", "1 2"],
        &["verify", "thm9", "A2", "--c", "1 2"],
        &["verify", "thm1", "A2", "--c", "1 2"],
        &["scan", "A2", "--cap", "0"],
        &["scan", "A2", "--claims", "bogus"],
    ] {
        assert_eq!(subword(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(subword(&["--help"]).status.code(), Some(0));
}

#[test]
fn out_file_roundtrips_complex_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.json");
    let out = subword(&["--json", "--out", path.to_str().unwrap(), "complex", "A3", "--c", "1 2 3"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["complex"]["facets"].as_array().unwrap().len(), 14);
}

#[test]
fn text_output() {
    let out = subword(&["complex", "A2", "--c", "1 2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("facets (5):"));
    assert!(text.contains("flag: true"));
    let out = subword(&["scan", "A2", "--all"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("overall: holds"));
}
