use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn asai(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asai")).args(args).output().expect("binary runs")
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn lfactor_steinberg_is_one_over_one_minus_t() {
    let o = asai(&["lfactor", "--rep", &data("steinberg")]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_out(&o);
    assert_eq!(v["asaiFactored"], "1/[(1 - t)]");
    assert_eq!(v["piU"], serde_json::json!(["1/1"]));
}

#[test]
fn lfactor_table_lists_factors() {
    let o = asai(&["lfactor", "--rep", &data("three_third"), "--output", "table"]);
    let text = String::from_utf8(o.stdout).unwrap();
    for f in ["(1 - 3t)", "(1 - t/3)", "(1 - t^2)"] {
        assert!(text.contains(f), "{text}");
    }
}

#[test]
fn lfactor_against_gives_rankin_selberg() {
    let o = asai(&["lfactor", "--rep", &data("three_third"), "--against", &data("gl1")]);
    let v = json_out(&o);
    assert_eq!(v["rankinSelbergFactored"], "1/[(1 - 5t_E/3)(1 - 15t_E)]");
}

#[test]
fn period_values() {
    let v = json_out(&asai(&["period", "--rep", &data("steinberg")]));
    assert_eq!(v["valueAt1"], "2/1");
    assert_eq!(v["match"], true);
    assert_eq!(v["series"].as_array().unwrap().len(), 41);

    let v = json_out(&asai(&["period", "--rep", &data("unitary"), "--order", "20", "--at-s", "2"]));
    assert_eq!(v["valueAt1"], "20/13");
    // (1 - t²)/((1 - 6t/5 + t²)(1 - t²)) at t = 1/4
    assert_eq!(v["valueAtS"], "80/61");
}

#[test]
fn period_pole_is_a_result() {
    let o = asai(&["period", "--rep", &data("pole"), "--order", "30"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_out(&o)["valueAt1"], "pole");
}

#[test]
fn segments_report() {
    let v = json_out(&asai(&["segments", "--rep", &data("steinberg")]));
    assert_eq!(v["generic"], true);
    assert_eq!(v["conductor"], 1);
    assert_eq!(v["piU"], serde_json::json!(["1/1"]));

    let o = asai(&["segments", "--rep", &data("linked")]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json_out(&o), serde_json::json!({"generic": false}));
}

#[test]
fn input_errors_exit_two() {
    let o = asai(&["segments", "--rep", &data("empty")]);
    assert_eq!(o.status.code(), Some(2));
    let o = asai(&["lfactor", "--rep", &data("bad_field")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("field.qF"));
    let o = asai(&["lfactor", "--rep", "/nonexistent.json"]);
    assert_eq!(o.status.code(), Some(2));
    let o = asai(&["period", "--rep", &data("steinberg"), "--at-s", "1/3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn non_generic_exits_three() {
    let o = asai(&["lfactor", "--rep", &data("linked")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not generic"));
}

#[test]
fn verify_suites() {
    let o = asai(&["verify", "--rep", &data("steinberg"), "--suite", "theorem1"]);
    assert_eq!(o.status.code(), Some(0));
    for line in String::from_utf8(o.stdout).unwrap().lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["pass"], true);
    }
    for suite in ["multiplicativity", "identities", "cpi"] {
        let o = asai(&["verify", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", String::from_utf8_lossy(&o.stderr));
    }
    // Steinberg at α = 1 is not conjugate-self-dual
    let o = asai(&["verify", "--rep", &data("steinberg"), "--suite", "cpi"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = asai(&["verify", "--suite", "theorem1", "--order", "20"]);
    let b = asai(&["verify", "--suite", "theorem1", "--order", "20"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
