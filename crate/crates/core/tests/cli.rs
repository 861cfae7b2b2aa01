use pinchcert::cli::run;
use pinchcert::lemmas::Certificate;
use serde_json::Value;

fn json(args: &[&str]) -> (i32, Value) {
    let mut argv = args.to_vec();
    argv.push("--json");
    let (code, out) = run(&argv);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

#[test]
fn resultant_of_two_linears() {
    assert_eq!(run(&["resultant", "--var", "x", "--p", "x-2", "--q", "x-5"]), (0, "-3\n".to_string()));
    let (code, v) = json(&["resultant", "--var", "x", "--p", "x-2", "--q", "x-5"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], "-3");
}

#[test]
fn certify_all_in_both_modes() {
    let (code, text) = run(&["certify", "--all"]);
    assert_eq!(code, 0);
    assert_eq!(text.matches("overall: PASS").count(), 4);
    assert!(!text.contains("[FAIL]"));
    let (jcode, v) = json(&["certify", "--all"]);
    assert_eq!(jcode, code);
    let certs: Vec<Certificate> = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(certs.len(), 4);
    assert!(certs.iter().all(Certificate::passed));
    // Re-serializing gives back the same document.
    assert_eq!(serde_json::to_value(&certs).unwrap(), v);
}

#[test]
fn single_lemma_names_are_case_insensitive() {
    let (code, v) = json(&["certify", "--lemma", "AlIneq1"]);
    assert_eq!(code, 0);
    assert_eq!(v["name"], "alineq1");
    assert_eq!(v["overall"], "pass");
}

#[test]
fn disc_and_sturm() {
    let (code, out) = run(&["disc", "--var", "x", "--p", "x^3 - x"]);
    assert_eq!((code, out.as_str()), (0, "4\n"));
    let (code, v) = json(&["sturm", "--p", "x^2 + 1", "--domain", "geq -3"]);
    assert_eq!(code, 0);
    assert_eq!(v["root_count"], 0);
    assert_eq!(v["positivity"]["status"], "pass");
    let (_, v) = json(&["sturm", "--p", "x^2 - 2", "--domain", "0,2"]);
    assert_eq!(v["root_count"], 1);
}

#[test]
fn oracle_echoes_seed_and_is_reproducible() {
    let (code, v) = json(&["oracle", "--n", "8", "--eta", "18", "--trials", "300"]);
    assert_eq!(code, 0);
    assert_eq!(v["seed"], 0);
    assert_eq!(v["violations"], 0);
    let (_, again) = json(&["oracle", "--n", "8", "--eta", "18", "--trials", "300", "--seed", "0"]);
    assert_eq!(v, again);
    let (_, text) = run(&["oracle", "--n", "8", "--eta", "18", "--trials", "30", "--seed", "5"]);
    assert!(text.contains("seed = 5"));
    assert_eq!(run(&["oracle", "--n", "4", "--eta", "18", "--trials", "3"]).0, 2);
}

#[test]
fn pinch_symbolic_reference() {
    let args = ["pinch", "--eps", "1/18", "--sigma", "7/18", "--kappa", "1/24", "--eta", "18", "--n-symbolic"];
    let (code, text) = run(&args);
    assert_eq!(code, 0);
    assert!(text.contains("theta      = 6323/2835 + 784/(513*n)"));
    assert!(text.contains("coef_sn    = -13/2430 - 784/(1539*n)"));
    assert!(text.contains("coef_const = -(3629*n^2 + 126690*n - 347760)/(1939140*(n + 4))"));
    let (jcode, v) = json(&args);
    assert_eq!(jcode, code);
    assert_eq!(v["certificate"]["overall"], "pass");
}

#[test]
fn pinch_accepts_decimals_and_reports_failures() {
    let ok = ["pinch", "--eps", "1/18", "--sigma", "7/18", "--kappa", "1/24", "--eta", "17.93", "--n", "6"];
    assert_eq!(run(&ok).0, 0);
    let bad = ["pinch", "--eps", "1/18", "--sigma", "10", "--kappa", "1/24", "--eta", "18", "--n-symbolic"];
    let (code, text) = run(&bad);
    assert_eq!(code, 1);
    assert!(text.contains("overall: FAIL"));
    let (jcode, v) = json(&bad);
    assert_eq!(jcode, 1);
    assert_eq!(v["certificate"]["overall"], "fail");
    assert_eq!(run(&["pinch", "--eps", "0", "--sigma", "1", "--kappa", "1", "--eta", "1"]).0, 2);
    assert_eq!(run(&["pinch", "--eps", "1/0", "--sigma", "1", "--kappa", "1", "--eta", "1"]).0, 2);
}

#[test]
fn optimize_from_config_file() {
    let cfg = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/optimize_default.json");
    let (code, v) = json(&["optimize", "--config", cfg]);
    assert_eq!(code, 0);
    let best = pinchcert::exactnum::parse_rational(v["best_eta"].as_str().unwrap()).unwrap();
    assert!(best <= pinchcert::exactnum::frac(1793, 100));
    assert_eq!(run(&["optimize", "--config", "/nonexistent.json"]).0, 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["certify"]).0, 2);
    assert_eq!(run(&["certify", "--lemma", "ineqef", "--all"]).0, 2);
    assert_eq!(run(&["disc", "--var", "x", "--p", "x +* 2"]).0, 2);
}
