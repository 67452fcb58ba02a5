use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

const OMEGA: &str = "c Omega\np cnf 3 4\n1 2 0\n-2 -3 0\n-1 -3 0\n-1 -2 3 0\n";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wildflower")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let v =
        serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

fn cnf_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".cnf").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn misere_sum_of_blue_flowers() {
    let (v, code) = json(&["eval", "*2:1 + *2:1", "--play", "misere"]);
    assert_eq!(code, 0);
    assert_eq!(v["outcome"], "L");
    let (v, _) = json(&["eval", "*2:1 + *2:1"]);
    assert_eq!(v["outcome"], "L");
}

#[test]
fn sprig_twin_adds_star() {
    let (v, code) = json(&["twin", "*:1 + *:1", "--family", "sprigs"]);
    assert_eq!(code, 0);
    assert_eq!(v["verified"], true);
    assert_eq!(v["kernel_member"], false);
    assert_eq!(v["twin"], "* + *:1 + *:1");
    assert_eq!(v["normal_outcomes"]["game"], v["misere_outcomes"]["twin"]);
}

#[test]
fn omega_reduction_golden() {
    let f = cnf_file(OMEGA);
    let (v, code) = json(&["reduce", f.path().to_str().unwrap(), "--verify", "full"]);
    assert_eq!(code, 0);
    assert_eq!(v["satisfiable"], true);
    assert_eq!(v["agree"], true);
    assert_eq!(v["outcome"], "L");
    assert_eq!(v["tail"], 30);
    assert_eq!(v["witness"]["choices"], serde_json::json!([2, 20, 8]));
    assert_eq!(v["witness"]["assignment"], serde_json::json!([true, false, false]));
    assert_eq!(v["trace"]["N_i"], serde_json::json!([30, 28, 8, 0]));
    assert_eq!(v["gadgets"][0]["x"], "{0,*,*2,*8,*16,*24,*32}:-1");
    assert_eq!(v["lemmas"], serde_json::json!({ "big_nimber": true, "color": true }));
}

#[test]
fn oracle_mode_skips_the_game() {
    let f = cnf_file(OMEGA);
    let (v, code) = json(&["reduce", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["verify"], "oracle");
    assert!(v["outcome"].is_null());
    assert_eq!(v["trace"]["N_i"], serde_json::json!([30, 28, 8, 0]));
}

/// Every JSON leaf shows up as exactly one text line with the same value.
#[test]
fn text_and_json_agree() {
    let f = cnf_file(OMEGA);
    let path = f.path().to_str().unwrap();
    for args in [
        vec!["reduce", path, "--verify", "full"],
        vec!["classify", "{0,*2,*3}:1 + *2 + {*2,*3}:-1/2"],
        vec!["canonical", "*:1 + 1/2"],
    ] {
        let (v, _) = json(&args);
        let text_out = run(&[&["--format", "text"], args.as_slice()].concat());
        let text = String::from_utf8(text_out.stdout).unwrap();
        let mut expected = Vec::new();
        leaves("", &v, &mut expected);
        let got: Vec<(String, String)> = text
            .lines()
            .map(|l| {
                let (k, val) = l.split_once(": ").unwrap();
                (k.to_string(), val.to_string())
            })
            .collect();
        assert_eq!(got, expected, "{args:?}");
    }
}

fn leaves(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) if m.contains_key("den_exp") => {
            let (num, exp) = (m["num"].as_i64().unwrap(), m["den_exp"].as_u64().unwrap());
            let s = if exp == 0 { num.to_string() } else { format!("{num}/{}", 1u64 << exp) };
            out.push((prefix.to_string(), s));
        }
        Value::Object(m) => m.iter().for_each(|(k, c)| leaves(&key(k), c, out)),
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            a.iter().enumerate().for_each(|(i, c)| leaves(&key(&i.to_string()), c, out))
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

#[test]
fn genus_and_classification() {
    let (v, code) = json(&["genus", "{0,*2,*3}"]);
    assert_eq!(code, 0);
    assert_eq!(v["genus"], "1^0");
    assert_eq!(v["tameness"], "fickle");
    let (v, _) = json(&["classify", "{*,*2,*3}:-1"]);
    let c = &v["components"][0];
    assert_eq!(c["wildflower"]["color"], "red");
    assert_eq!(c["wildflower"]["restricted_fickle"], true);
    assert_eq!(c["mutant_flower"]["height"], 0);
}

#[test]
fn family_sweep_exit_codes() {
    let (v, code) = json(&["check", "sprigs", "--bound", "2"]);
    assert_eq!((code, v["passed"].clone(), v["instances"].clone()), (0, Value::Bool(true), Value::from(21)));
    // The one mutant-flower pair whose heads avoid 0 and 1 breaks the height rule.
    let (v, code) = json(&["check", "mutant-flowers"]);
    assert_eq!(code, 1);
    assert_eq!(v["failures"][0]["input"], "{*2,*3}:-1 + {*2,*3}:1");
}

#[test]
fn input_errors_exit_two() {
    let bad_cnf = cnf_file("p cnf 2 1\n1 2 3 0\n");
    let not_tovey = cnf_file("p cnf 3 1\n1 2 3 0\n");
    for args in [
        vec!["eval", "3/5"],
        vec!["eval", "{0 |"],
        vec!["genus", "*:1"],
        vec!["twin", "*2:1", "--family", "sprigs"],
        vec!["twin", "*:1", "--family", "weeds"],
        vec!["check", "tame-impartial", "--bound", "5"],
        vec!["reduce", "/no/such/file.cnf"],
        vec!["reduce", bad_cnf.path().to_str().unwrap()],
        vec!["reduce", not_tovey.path().to_str().unwrap()],
        vec!["eval", "*", "--play", "sideways"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn full_game_size_limit() {
    let f = cnf_file(OMEGA);
    let path = f.path().to_str().unwrap();
    assert_eq!(run(&["reduce", path, "--verify", "full", "--max-vars", "2"]).status.code(), Some(2));
}
