use std::process::{Command, Output};

use koornwinder::rational;
use koornwinder::Poly;
use proptest::prelude::*;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_koornwinder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn strings(v: &serde_json::Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn coeffs_json_c2_at_alpha_zero() {
    let doc = json(&["coeffs", "--alpha", "0", "--max-i", "2", "--a01", "0", "--format", "json"]);
    assert_eq!(doc["alpha"], "0");
    assert_eq!(doc["a01"], "0");
    let c2 = &doc["coeffs"][1];
    assert_eq!(c2["i"], 2);
    assert_eq!(strings(&c2["c"]), vec!["6", "0", "-6"]);
}

#[test]
fn coeffs_a1_is_minus_a01_x() {
    let doc = json(&["coeffs", "--alpha", "0", "--max-i", "1", "--a01", "1", "--format", "json"]);
    assert_eq!(strings(&doc["coeffs"][0]["a"]), vec!["0", "-1"]);
    let text = stdout(&run(&["coeffs", "--alpha", "0", "--max-i", "1", "--a01", "1"]));
    assert!(text.contains("a[1] = [0, -1]"), "{text}");
}

#[test]
fn inversion_route_matches_closed_route() {
    let base = ["coeffs", "--alpha", "-1/2", "--max-i", "5", "--a01", "3", "--format", "json"];
    let closed = json(&base);
    let mut inv_args = base.to_vec();
    inv_args.extend(["--route", "inversion"]);
    assert_eq!(json(&inv_args), closed);
}

#[test]
fn text_and_json_agree() {
    let args = ["coeffs", "--alpha", "7/3", "--max-i", "4", "--a01", "-2", "--n", "6"];
    let text = stdout(&run(&args));
    let mut jargs = args.to_vec();
    jargs.extend(["--format", "json"]);
    let doc = json(&jargs);

    let lookup = |key: &str| -> String {
        text.lines()
            .find_map(|l| l.strip_prefix(&format!("{key} = ")))
            .unwrap_or_else(|| panic!("missing {key}"))
            .to_string()
    };
    for entry in doc["a0"].as_array().unwrap() {
        let n = entry["n"].as_u64().unwrap();
        assert_eq!(lookup(&format!("a0[{n}]")), entry["value"].as_str().unwrap());
    }
    for entry in doc["coeffs"].as_array().unwrap() {
        let i = entry["i"].as_u64().unwrap();
        for key in ["a", "b", "c"] {
            let expected = format!("[{}]", strings(&entry[key]).join(", "));
            assert_eq!(lookup(&format!("{key}[{i}]")), expected);
        }
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["coeffs", "--alpha", "-2"],
        vec!["coeffs", "--alpha", "-1"],
        vec!["coeffs", "--alpha", "0.5"],
        vec!["coeffs", "--alpha", "1/0"],
        vec!["ode-check", "--alpha", "0", "--m", "-1", "--n", "2"],
        vec!["order", "--alpha", "1/2"],
        vec!["order", "--alpha", "-1/2"],
        vec!["verify", "--suite", "bogus"],
        vec!["verify", "--alpha", "-3"],
        vec!["frobnicate"],
        vec![],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?} wrote to stdout");
        assert!(!o.stderr.is_empty());
    }
    let o = run(&["order", "--alpha", "1/2"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("nonnegative integer"));
}

#[test]
fn ode_check_instances() {
    for args in [
        ["--alpha", "0", "--m", "1", "--n", "6", "--a01", "0"],
        ["--alpha", "1/2", "--m", "0", "--n", "4", "--a01", "5"],
        ["--alpha", "-1/2", "--m", "3", "--n", "7", "--a01", "1"],
    ] {
        let mut full = vec!["ode-check"];
        full.extend(args);
        let o = run(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&o), "residual = 0\n");
    }
}

#[test]
fn corrupted_ode_check_reports_residual() {
    let o = run(&["ode-check", "--alpha", "1/2", "--m", "1", "--n", "3", "--perturb", "1/7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["passed"], false);
    let residual = Poly::from_strings(&strings(&doc["residual"])).unwrap();
    // perturbation enters as M * delta * y
    let y = koornwinder::diffeq::gen_poly(3, &rational::frac(1, 2), &rational::int(1)).unwrap();
    assert_eq!(residual, y.scale(&rational::frac(1, 7)));
}

#[test]
fn order_outputs() {
    let o = run(&["order", "--alpha", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("order 4\n"), "{text}");
    assert!(text.contains("leading = [-1/2, 0, 1, 0, -1/2]"));
    let doc = json(&["order", "--alpha", "2", "--format", "json"]);
    assert_eq!(doc["order"], 8);
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "--suite", "inversion", "--alpha", "1/2", "--max-i", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("inversion: 91/91 passed"));
    let o = run(&["verify", "--suite", "cc", "--alpha", "-1/2"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&["verify", "--suite", "all", "--max-i", "3", "--format", "json"]);
    assert_eq!(doc["passed"], true);
    let names: Vec<&str> = doc["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    for s in ["inversion", "spec", "definitions", "relations", "systems", "telescope", "cc", "alt"] {
        assert!(names.contains(&s), "{s} missing from {names:?}");
    }
}

#[test]
fn eval_outputs() {
    let doc = json(&["eval", "--alpha", "0", "--m", "1", "--n", "1", "--x", "1", "--format", "json"]);
    // C0 = (1+2M)^2, C1 = 2M + 4M^2, P = (1+2M)(a+1) x
    assert_eq!(doc["c0"], "9");
    assert_eq!(doc["c1"], "6");
    assert_eq!(strings(&doc["generalized"]), vec!["0", "3"]);
    assert_eq!(doc["at"]["generalized"], "3");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn json_rationals_round_trip(num in 0i64..40, den in 1i64..12, a01 in -9i64..9) {
        let alpha = rational::format(&rational::frac(num, den));
        let a01 = a01.to_string();
        let doc = json(&["coeffs", "--alpha", &alpha, "--max-i", "4", "--a01", &a01, "--format", "json"]);
        prop_assert_eq!(doc["alpha"].as_str().unwrap(), alpha.as_str());
        for entry in doc["coeffs"].as_array().unwrap() {
            for key in ["a", "b", "c"] {
                for s in strings(&entry[key]) {
                    prop_assert_eq!(rational::format(&rational::parse(&s).unwrap()), s);
                }
            }
        }
    }
}
