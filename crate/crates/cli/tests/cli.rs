use std::process::{Command, Output};

use flagmult::characters::{CharacterJson, GradedCharacter};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagmult"))
        .args(args)
        .env_remove("FLAGMULT_SEED")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn classify_example() {
    let v = json(&["classify", "--type", "A", "--rank", "3", "--word", "2,3,1"]);
    assert_eq!(
        v,
        serde_json::json!({"fully_commutative": true, "minuscule": true, "dominant_minuscule": false, "strict": true})
    );
}

#[test]
fn nakada_example() {
    let v = json(&["nakada", "--type", "A", "--rank", "3", "--word", "2,1,3,2"]);
    assert_eq!(v, serde_json::json!({"equal": true}));
    let r = json(&[
        "nakada",
        "--type",
        "A",
        "--rank",
        "4",
        "--word",
        "2,1,3,2",
        "--mode",
        "randomized",
        "--trials",
        "5",
    ]);
    assert_eq!(r["equal"], true);
    assert_eq!(r["mode"], "randomized");
    assert_eq!(r["trials"], 5);
}

#[test]
fn usage_errors_name_the_flag() {
    let out = run(&["classify", "--type", "A", "--rank", "3", "--word", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--word"));
    let out = run(&[
        "nakada",
        "--type",
        "D",
        "--rank",
        "4",
        "--word",
        "3,1,2,4,3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--word"));
    let out = run(&["roots", "--type", "E", "--rank", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--rank"));
    let out = run(&["mutate", "--type", "A", "--rank", "3", "--position", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--position"));
    let out = run(&["dbar", "--type", "A", "--rank", "3", "--catalog", "frozen"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "walk", "--type", "A", "--rank", "3", "--start", "word", "--word", "1,2,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn d4_walk_is_deterministic() {
    let one = run(&["walk", "--type", "D", "--rank", "4", "--start", "nat"]);
    let again = run(&["walk", "--type", "D", "--rank", "4", "--start", "nat"]);
    let four = run(&[
        "walk",
        "--type",
        "D",
        "--rank",
        "4",
        "--start",
        "nat",
        "--threads",
        "4",
    ]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, again.stdout);
    assert_eq!(one.stdout, four.stdout);
    let v: Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(v["stats"]["seeds"], 2316);
    assert_eq!(v["stats"]["complete"], true);
    assert!(!v["atlas"].as_array().unwrap().is_empty());
}

#[test]
fn seed_and_mutate() {
    let v = json(&["seed", "--type", "E", "--rank", "6"]);
    let checks = v["checks"].as_object().unwrap();
    assert!(checks
        .values()
        .all(|c| c.as_array().is_some_and(|a| a.is_empty()) || c == true));
    let m = json(&["mutate", "--type", "A", "--rank", "3", "--position", "1"]);
    assert_eq!(m["to"], "2,1,2,3,2,1");
    assert_eq!(m["exchange_identity"], true);
}

#[test]
fn frozen_catalog() {
    let v = json(&["dbar", "--type", "D", "--rank", "4", "--catalog", "frozen"]);
    assert_eq!(v["equals_inverse"], true);
    assert_eq!(v["dimension"], "168");
    assert_eq!(v["q_commutes"], serde_json::json!([true, true, true, true]));
}

#[test]
fn tables_round_trip() {
    let v = json(&["tables"]);
    assert_eq!(v["d4"]["bootstrap_matches"], true);
    let frozen = flagmult::catalogs::d4_tables().unwrap().frozen_character;
    let j: CharacterJson =
        serde_json::from_value(serde_json::to_value(frozen.to_json()).unwrap()).unwrap();
    assert_eq!(GradedCharacter::from_json(&j).unwrap(), frozen);
}

#[test]
fn emit_and_text() {
    let path = std::env::temp_dir().join(format!("flagmult-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = run(&["roots", "--type", "D", "--rank", "4", "--emit", p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["count"], 12);
    std::fs::remove_file(&path).unwrap();
    let t = run(&[
        "hook", "--type", "A", "--rank", "3", "--word", "2,1,3,2", "--format", "text",
    ]);
    assert_eq!(
        String::from_utf8(t.stdout).unwrap(),
        "reduced_words: 2\nhook_formula: 2\nequal: true\n"
    );
}
