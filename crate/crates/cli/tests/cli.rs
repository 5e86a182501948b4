use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conorbit")).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conorbit")).args(args).env(key, val).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn elements(v: &Value) -> Vec<Vec<u64>> {
    v["cosets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["elements"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect())
        .collect()
}

#[test]
fn cosets_length_eight() {
    let v = json(&["cosets", "--q", "3", "--n", "8", "--lambda", "-1"]);
    assert_eq!(elements(&v), vec![vec![1, 3, 9, 11], vec![5, 7, 13, 15]]);
    assert_eq!(v["params"]["rn"], 16);
    assert_eq!(v["params"]["m"], 4);
}

#[test]
fn cosets_smallest_cyclic_case() {
    let v = json(&["cosets", "--q", "3", "--n", "2", "--lambda", "1"]);
    assert_eq!(v["params"]["rn"], 2);
    assert_eq!(elements(&v), vec![vec![0], vec![1]]);
}

#[test]
fn cosets_with_exponent_lambda() {
    let v = json(&["cosets", "--q", "9", "--n", "40", "--lambda", "xi^4"]);
    assert_eq!(v["params"]["r"], 2);
    assert!(elements(&v).contains(&vec![1, 9]));
}

#[test]
fn weights_examples() {
    let v = json(&["weights", "--q", "3", "--n", "8", "--lambda", "-1", "--cosets", "1"]);
    assert_eq!(v["weights"]["enumerator"], "1+16x^3+64x^6");
    assert_eq!(v["weights"]["ell"], 2);

    let v = json(&["weights", "--q", "5", "--n", "39", "--lambda", "-1", "--cosets", "0,9"]);
    let e = v["weights"]["enumerator"].as_str().unwrap();
    assert!(e.starts_with("1+156x^25+468x^28+"), "{e}");
    assert!(e.ends_with("+4x^39"), "{e}");
    assert_eq!(v["weights"]["ell"], 9);

    let v = json(&["weights", "--q", "3", "--n", "4", "--lambda", "-1", "--cosets", "all"]);
    assert_eq!(v["weights"]["enumerator"], "1+8x+24x^2+32x^3+16x^4");
}

#[test]
fn weights_csv_and_text() {
    let out = run(&["weights", "--q", "3", "--n", "8", "--lambda", "-1", "--cosets", "1", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "weight,count\n0,1\n3,16\n6,64\n");
    let out = run(&["weights", "--q", "3", "--n", "8", "--lambda", "-1", "--cosets", "1", "--format", "text"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1+16x^3+64x^6\nell = 2\n");
}

fn method(v: &Value, name: &str) -> Value {
    v["methods"].as_array().unwrap().iter().find(|m| m["name"] == name).unwrap()["value"].clone()
}

#[test]
fn verify_length_twenty() {
    let v = json(&["verify", "--q", "3", "--n", "20", "--lambda", "-1", "--cosets", "1,5"]);
    assert_eq!(method(&v, "rho_sigma_subsets"), 10);
    assert_eq!(method(&v, "mu_pair_equal"), 7);
    assert_eq!(v["ell"], 4);
    assert_eq!(v["oracle"]["mu-rho-sigma"], 7);
}

#[test]
fn verify_negation_pair_reports_the_open_question() {
    let v = json(&["verify", "--q", "3", "--n", "40", "--lambda", "-1", "--cosets", "3,6"]);
    assert_eq!(method(&v, "mu_pair_equal"), 25);
    assert_eq!(method(&v, "neg_mu_pair"), 19);
    assert_eq!(v["ell"], 12);
    // The brute-force count disagrees with the closed form; this is
    // reported rather than treated as a verification failure.
    assert_eq!(v["oracle"]["neg-mu-rho-sigma"], 24);
    assert_eq!(method(&v, "neg_mu_pair_doubled"), 24);
    assert_eq!(v["open_questions"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_frobenius_pair() {
    let v = json(&["verify", "--q", "9", "--n", "40", "--lambda", "2", "--cosets", "0,17"]);
    assert_eq!(method(&v, "mu_pair_equal"), 26);
    assert_eq!(method(&v, "frob1_pair"), 14);
    assert_eq!(v["oracle"]["frob1-rho-sigma"], 14);
    assert_eq!(v["ell"], 6);
}

#[test]
fn json_round_trips_byte_for_byte() {
    let out = run(&["verify", "--q", "3", "--n", "8", "--lambda", "-1", "--cosets", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    let again = run(&["verify", "--q", "3", "--n", "8", "--lambda", "-1", "--cosets", "1"]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), text);
}

#[test]
fn orbits_and_bounds() {
    let v = json(&["orbits", "--q", "3", "--n", "8", "--lambda", "-1", "--cosets", "1", "--group", "rho-sigma"]);
    assert_eq!(v["orbits"][0]["orbit_count"], 5);
    assert_eq!(v["orbits"][0]["burnside_count"], 5);
    let v = json(&["bounds", "--q", "5", "--n", "39", "--lambda", "-1", "--cosets", "0,9"]);
    assert_eq!(method(&v, "rho_sigma_subsets"), 21);
    assert_eq!(method(&v, "mu_pair_unit"), 13);
    assert!(v["ell"].is_null());
}

#[test]
fn code_command() {
    let v = json(&["code", "--q", "3", "--n", "8", "--lambda", "-1", "--cosets", "1"]);
    assert_eq!(v["dim"], 4);
    assert_eq!(v["genpoly"].as_array().unwrap().len(), 5);
    assert_eq!(v["genpoly"][4], 1);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["cosets", "--q", "6", "--n", "5"]).status.code(), Some(2));
    assert_eq!(run(&["cosets", "--q", "3", "--n", "6"]).status.code(), Some(2));
    assert_eq!(run(&["weights", "--q", "3", "--n", "8", "--lambda", "-1", "--cosets", "7"]).status.code(), Some(2));
    assert_eq!(run(&["weights", "--q", "3", "--n", "8", "--lambda", "bogus", "--cosets", "1"]).status.code(), Some(2));
    assert_eq!(run(&["cosets"]).status.code(), Some(2));
    let cap = run(&["weights", "--q", "5", "--n", "39", "--lambda", "-1", "--cosets", "0,9", "--cap-enum", "100"]);
    assert_eq!(cap.status.code(), Some(3));
    let cap = run_env(&["cosets", "--q", "3", "--n", "8", "--lambda", "-1"], "CONORBIT_CAP_FIELD", "10");
    assert_eq!(cap.status.code(), Some(3));
}

#[test]
fn search_examples() {
    let v = json(&["search", "--q", "3", "--n-max", "12", "--orders", "2"]);
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["n"] == 11 && r["lambda"] == "-1" && r["cosets"] == "7" && r["ell"] == 2));

    let v = json(&["search", "--q", "32", "--n-max", "20"]);
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["n"] == 11 && r["lambda"] == "xi^1" && r["cosets"] == "1" && r["ell"] == 2));
    for r in rows {
        assert!(r["ell"].as_u64().unwrap() <= r["best_bound"].as_u64().unwrap());
    }

    let v = json(&["search", "--n-max", "12"]);
    assert!(v["rows"].as_array().unwrap().is_empty());
}

#[test]
fn search_catalog_is_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.csv");
    let p = path.to_str().unwrap();
    assert!(run(&["search", "--q", "3", "--n-max", "12", "--catalog", p]).status.success());
    let first = std::fs::read_to_string(&path).unwrap();
    assert!(first.starts_with("q,n,lambda,cosets,dim,ell,best_bound,method,tight\n"));
    assert!(run(&["search", "--q", "3", "--n-max", "12", "--catalog", p]).status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);
    assert!(run(&["search", "--q", "32", "--n-max", "12", "--catalog", p]).status.success());
    let merged = std::fs::read_to_string(&path).unwrap();
    assert!(merged.len() > first.len());
    assert!(merged.contains("\n32,11,xi^1,1,2,2,2,"));
    let side: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("catalog.csv.json")).unwrap()).unwrap();
    assert_eq!(side["tool"], "conorbit");
    assert!(side["caps"]["enumeration"].is_u64());
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let out = run(&["weights", "--q", "3", "--n", "8", "--lambda", "-1", "--cosets", "1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["weights"]["ell"], 2);
}
