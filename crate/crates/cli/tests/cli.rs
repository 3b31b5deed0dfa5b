use std::process::{Command, Output};

use serde_json::Value;

fn wordbell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wordbell")).args(args).env_remove("WORDBELL_MAX_DEGREE").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = wordbell(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn expand_mk_keeps_key_order() {
    let out = wordbell(&["expand", "mk", "3", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let compact: String = String::from_utf8(out.stdout).unwrap().split_whitespace().collect();
    assert_eq!(compact, r#"{"[2,1]":2,"[1,2]":1}"#);
    assert_eq!(json(&["expand", "mk", "--n", "1", "--k", "1"]), serde_json::json!({"[1]": 1}));
}

#[test]
fn expand_word_bell_has_seven_terms() {
    let v = json(&["expand", "wordBell", "4", "2"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 7);
    assert_eq!(v["basis"], "Phi");
}

#[test]
fn expand_colored_psi_counts_lists() {
    let v = json(&["expand", "coloredPsi", "4", "2", "factorial"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 36);
}

#[test]
fn table_lists_total_column() {
    let out = wordbell(&["table", "lists", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let totals: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(totals, ["1", "1", "3", "13", "73", "501"]);
}

#[test]
fn table_entries() {
    assert_eq!(json(&["table", "stirling2", "1"])["partial"], serde_json::json!([["1"]]));
    assert_eq!(json(&["table", "idempotent", "4"])["partial"][3][1], "24");
    let custom = json(&["table", "custom", "4", "a=1,2,9,64 tail:tree"]);
    assert_eq!(custom["total"], serde_json::json!(["1", "1", "3", "16", "125"]));
    assert_eq!(json(&["table", "level2", "5"])["total"], serde_json::json!(["1", "1", "3", "12", "60", "358"]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["table", "bogus", "3"][..],
        &["table", "custom", "3", "a=1,x"],
        &["table", "custom", "3"],
        &["expand", "mk", "3", "2", "--format", "csv"],
        &["expand", "wordBell", "2", "3"],
        &["verify", "nothing"],
    ] {
        assert_eq!(wordbell(args).status.code(), Some(2), "{args:?}");
    }
    let capped = Command::new(env!("CARGO_BIN_EXE_wordbell")).args(["table", "lists", "5"]).env("WORDBELL_MAX_DEGREE", "3").output().unwrap();
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let hopf = wordbell(&["verify", "hopf", "3"]);
    assert_eq!(hopf.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&hopf.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    // the literal ≺ recursion fails at n = 3
    let mk = wordbell(&["verify", "mk"]);
    assert_eq!(mk.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&mk.stdout).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["identity"].as_str().unwrap().starts_with("Ξ(𝔅_{n,k})")));
    let appendix: Value = serde_json::from_slice(&wordbell(&["verify", "appendix", "--max-n", "4"]).stdout).unwrap();
    assert!(appendix["discrepancies"].as_array().is_some_and(|d| !d.is_empty()));
}

#[test]
fn realize_and_mk() {
    let r = json(&["realize", "2", "1", "--letters", "2"]);
    // 𝔅_{2,1} = Φ_{{1,2}}: the words aa over two letters
    assert_eq!(r["polynomial"]["terms"].as_array().unwrap().len(), 2);
    let m = json(&["mk", "3"]);
    assert_eq!(m["hessenberg_matches"], true);
    assert_eq!(m["partial"]["2"], serde_json::json!({"[2,1]": 2, "[1,2]": 1}));
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let a = wordbell(&["expand", "coloredPsi", "4", "--seq", "idempotent"]).stdout;
    let b = wordbell(&["expand", "coloredPsi", "4", "--seq", "idempotent"]).stdout;
    assert_eq!(a, b);
    let path = std::env::temp_dir().join(format!("wordbell-cli-test-{}.json", std::process::id()));
    let out = wordbell(&["expand", "coloredPsi", "4", "--seq", "idempotent", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a);
    std::fs::remove_file(path).unwrap();
}
