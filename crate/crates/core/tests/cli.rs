//! End-to-end checks of the command-line surface: output content, JSON
//! schemas and exit codes.

use qrat::cli::run;
use qrat::poly::PolyJson;

fn invoke(args: &[&str]) -> (i32, String) {
    let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    let code = run(&argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn qrat_text_and_latex() {
    let (code, out) = invoke(&["qrat", "5/2"]);
    assert_eq!(code, 0);
    assert!(out.contains("(1 + 2q + q^2 + q^3) / (1 + q)"), "{out}");

    let (code, out) = invoke(&["qrat", "5/2", "--format", "latex"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "\\frac{1+2q+q^{2}+q^{3}}{1+q}");
}

#[test]
fn qrat_reduces_and_rejects_below_one() {
    let (code, out) = invoke(&["qrat", "4/6"]);
    assert_eq!(code, 1);
    assert!(out.contains("farey"), "{out}");

    // reduction to a valid value is accepted but flagged
    let (code, out) = invoke(&["qrat", "10/4", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["r"], "5");
    assert_eq!(v["s"], "2");
    assert_eq!(v["reduced"], true);
}

#[test]
fn qrat_json_schema_roundtrip() {
    let (code, out) = invoke(&["qrat", "7/5", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let num: PolyJson = serde_json::from_value(v["num"].clone()).unwrap();
    assert_eq!(num.min_exp, 0);
    assert_eq!(num.coeffs, vec!["1", "1", "2", "2", "1"]);
    let back = qrat::poly::LaurentPoly::try_from(&num).unwrap();
    assert_eq!(back.at_one(), num_bigint::BigInt::from(7));
}

#[test]
fn expand_and_convert() {
    let (code, out) = invoke(&["expand", "7/5"]);
    assert_eq!(code, 0);
    assert!(
        out.contains("[1,2,1,1]") && out.contains("[[2,2,3]]"),
        "{out}"
    );

    let (code, out) = invoke(&["convert", "[1,2,1,1]"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "[[2,2,3]]");

    let (code, out) = invoke(&["convert", "[[3,2]]"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "[2,2]");

    let (code, _) = invoke(&["convert", "(1,2)"]);
    assert_eq!(code, 2);

    // odd-length regular input is rejected as a domain error
    let (code, out) = invoke(&["convert", "[1,2,1]"]);
    assert_eq!(code, 1);
    assert!(out.contains("even"), "{out}");
}

#[test]
fn continuant_and_matrix() {
    let (code, out) = invoke(&["continuant", "3,2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1 + 2q + q^2 + q^3");

    let (code, out) = invoke(&["continuant", "3,2", "--q-inverse"]);
    assert_eq!(code, 0);
    assert!(out.contains("q^-3"), "{out}");

    let (code, out) = invoke(&["matrix", "[[3,2]]"]);
    assert_eq!(code, 0);
    assert!(
        out.contains("[[1 + 2q + q^2 + q^3, -q - q^2 - q^3], [1 + q, -q]]"),
        "{out}"
    );
}

#[test]
fn farey_json_fields() {
    let (code, out) = invoke(&["farey", "--depth", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let nodes = v.as_array().unwrap();
    assert_eq!(nodes.len(), 7); // 1 + 2 + 4
    let five_halves = nodes
        .iter()
        .find(|n| n["value"] == "5/2")
        .expect("5/2 at depth 2");
    assert_eq!(five_halves["num"]["coeffs"][1], "2");
    assert_eq!(five_halves["parent_edge_weight_exponent"], 1);
    let four_ones = nodes
        .iter()
        .find(|n| n["value"] == "4/1")
        .expect("4/1 at depth 2");
    assert_eq!(four_ones["parent_edge_weight_exponent"], 3);
}

#[test]
fn closures_routes() {
    let (code, out) = invoke(&["closures", "25/11"]);
    assert_eq!(code, 0);
    assert!(out.contains("[1, 3, 4, 5, 5, 4, 2, 1]"), "{out}");

    let (code, out) = invoke(&["closures", "25/11", "--prime"]);
    assert_eq!(code, 0);
    assert!(out.contains("[1, 2, 2, 3, 2, 1]"), "{out}");

    let (code, out) = invoke(&["closures", "5/2", "--multivariate", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let closures = v["closures"].as_array().unwrap();
    assert_eq!(closures.len(), 5);

    let (code, out) = invoke(&["closures", "8/3", "--jones"]);
    assert_eq!(code, 0);
    assert!(out.contains("[1, 1, 2, 1, 2, 1]"), "{out}");

    // beyond the brute-force bound: a capacity error, distinct from domain
    let (code, out) = invoke(&["closures", "40/1"]);
    assert_eq!(code, 1);
    assert!(out.contains("capacity"), "{out}");
}

#[test]
fn jones_output() {
    let (code, out) = invoke(&["jones", "8/3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let coeffs: Vec<&str> = v["j"]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, vec!["1", "1", "2", "1", "2", "1"]);

    for route in ["continuant", "closures"] {
        let (code, out) = invoke(&["jones", "15/4", "--route", route]);
        assert_eq!(code, 0);
        assert!(
            out.contains("1 + q + 2q^2 + 3q^3 + 2q^4 + 3q^5 + 2q^6 + q^7"),
            "{out}"
        );
    }

    let (code, out) = invoke(&["jones", "8/3", "--latex"]);
    assert_eq!(code, 0);
    assert!(out.contains("q^{2}"), "{out}");
}

#[test]
fn sequences_output() {
    let (code, out) = invoke(&["fib", "9", "--triangle"]);
    assert_eq!(code, 0);
    assert!(out.contains("1 4 7 10 11 10 7 4 1"), "{out}");

    let (code, out) = invoke(&["pell", "4", "--csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last().unwrap(), "1,2,3,3,2,1");

    let (code, out) = invoke(&["pell", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("plain:  1 + 2q + q^2 + q^3"), "{out}");
    assert!(out.contains("mirror: 1 + q + 2q^2 + q^3"), "{out}");

    let (code, out) = invoke(&["fib", "3", "--bfile"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.lines().collect::<Vec<_>>(),
        vec!["1 1", "2 1", "3 1", "4 1", "5 1", "6 1"]
    );
}

#[test]
fn quiddity_check() {
    let (code, out) = invoke(&["quiddity", "--check", "3,3,1,2,4,3,1,2,4,1"]);
    assert_eq!(code, 0);
    assert!(
        out.contains("Triangulation") && out.contains("-q^7"),
        "{out}"
    );

    let (code, out) = invoke(&["quiddity", "--check", "2,2,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("Neither"), "{out}");
}

#[test]
fn verify_small_and_unknown_suite() {
    let (code, out) = invoke(&[
        "verify",
        "--suite",
        "equality",
        "--max-sum",
        "40",
        "--seed",
        "7",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS") && out.contains("seed 7"), "{out}");

    let (code, out) = invoke(&["verify", "--suite", "nonsense"]);
    assert_eq!(code, 2);
    assert!(out.contains("unknown suite"), "{out}");
}

#[test]
fn conjectures_always_succeed() {
    let (code, out) = invoke(&["conjectures", "--max-sum", "20"]);
    assert_eq!(code, 0);
    assert!(out.contains("0 counterexamples"), "{out}");
}

#[test]
fn malformed_input_is_usage_error() {
    let (code, _) = invoke(&["qrat", "five/two"]);
    assert_eq!(code, 2);
    let (code, _) = invoke(&["qrat"]);
    assert_eq!(code, 2);
    let (code, _) = invoke(&["no-such-command"]);
    assert_eq!(code, 2);
}

/// The installed binary behaves like the in-process dispatcher.
#[test]
fn binary_smoke() {
    let exe = env!("CARGO_BIN_EXE_qrat");
    let output = std::process::Command::new(exe)
        .args(["qrat", "5/2", "--format", "latex"])
        .output()
        .expect("binary runs");
    assert!(output.status.success());
    assert_eq!(
        String::from_utf8_lossy(&output.stdout).trim(),
        "\\frac{1+2q+q^{2}+q^{3}}{1+q}"
    );

    let output = std::process::Command::new(exe)
        .args(["qrat", "4/6"])
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(1));

    // QRAT_FORMAT sets the default format
    let output = std::process::Command::new(exe)
        .args(["qrat", "5/2"])
        .env("QRAT_FORMAT", "latex")
        .output()
        .expect("binary runs");
    assert!(String::from_utf8_lossy(&output.stdout).contains("\\frac"));
}
