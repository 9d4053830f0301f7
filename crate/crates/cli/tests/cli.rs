use std::process::{Command, Output};

use serde_json::Value;

fn linfield(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linfield")).args(args).output().expect("binary runs")
}

fn structured(args: &[&str]) -> (i32, Value) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut full: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    full.extend(["--out", &p]);
    let out = linfield(&full);
    let text = std::fs::read_to_string(&path).expect("report written");
    (out.status.code().unwrap(), serde_json::from_str(&text).expect("valid json"))
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"].as_array().unwrap().iter().find(|c| c["name"] == name).unwrap_or_else(|| panic!("no check `{name}`"))
}

#[test]
fn gammal_order_and_transitivity() {
    let (code, r) = structured(&["groups", "gammal", "--q", "2", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(check(&r, "order formula")["values"]["order"], "21");
    assert_eq!(check(&r, "transitive on nonzero vectors")["values"]["transitive"], "true");
    assert_eq!(r["tool"], "linfield");
    assert_eq!(r["input"]["command"], "groups gammal");
}

#[test]
fn moore_verify_passes_all_five() {
    let (code, r) = structured(&["moore", "verify", "--q", "2", "--field", "GF(2)", "--lin", "x^8+x^2+x"]);
    assert_eq!(code, 0);
    let checks = r["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 5);
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn distinguish_leaves_sl() {
    let (code, r) = structured(&["galois", "distinguish", "--lin", "x^8+x^2+t*x", "--candidates", "Z,GammaL,SL", "--seed", "0"]);
    assert_eq!(code, 0);
    assert_eq!(check(&r, "some candidate is consistent")["values"]["consistent"], "SL");
    assert_eq!(check(&r, "candidate Z")["values"]["status"], "ruled out");
    assert_eq!(check(&r, "candidate GammaL")["witness"], "{1,1,1,2,2}");
    assert_eq!(r["seed"], 0);
}

#[test]
fn all_candidates_ruled_out_exits_1() {
    let out = linfield(&["galois", "distinguish", "--lin", "x^8+x^2+t*x", "--candidates", "Z"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[FAIL] some candidate is consistent"), "{text}");
}

#[test]
fn failed_check_exits_1_with_witness() {
    // x^4 + x over GF(2): L(x)/x = (x + 1)(x^2 + x + 1).
    let (code, r) = structured(&["linpoly", "irreducible", "--q", "2", "--lin", "x^4+x"]);
    assert_eq!(code, 1);
    let c = check(&r, "L(x)/x is irreducible");
    assert_eq!(c["pass"], false);
    assert!(c["witness"].as_str().unwrap().contains("[1, 2]"));
}

#[test]
fn family_violations_are_reported() {
    let (code, r) = structured(&["linpoly", "family", "--q", "2", "--f", "x^8+x^2", "--g", "x"]);
    assert_eq!(code, 1);
    let w = check(&r, "family hypotheses hold")["witness"].as_str().unwrap().to_string();
    assert!(w.contains("coefficient of x in g"), "{w}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(linfield(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(linfield(&["groups", "gammal", "--q", "2"]).status.code(), Some(2));
    let bad = linfield(&["linpoly", "roots", "--q", "2", "--lin", "x^3+x"]);
    assert_eq!(bad.status.code(), Some(2));
    let err = String::from_utf8(bad.stderr).unwrap();
    assert!(err.contains("x^3"), "offending token reported: {err}");
    assert_eq!(linfield(&["field", "--q", "6"]).status.code(), Some(2));
    assert_eq!(linfield(&["suite", "nonexistent"]).status.code(), Some(2));
}

fn strip_timing(s: &str) -> String {
    let mut v: Value = serde_json::from_str(s).unwrap();
    v.as_object_mut().unwrap().remove("timing");
    serde_json::to_string_pretty(&v).unwrap()
}

#[test]
fn structured_reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["galois", "distinguish", "--lin", "x^8+t*x", "--seed", "3", "--samples", "200"],
        vec!["groups", "classify", "--q", "5", "--n", "2"],
        vec!["groups", "classify", "--q", "3", "--n", "2", "--mode", "randomized", "--samples", "50", "--seed", "7"],
    ] {
        let mut texts = Vec::new();
        for i in 0..2 {
            let path = dir.path().join(format!("r{i}.json"));
            let mut full = args.clone();
            let p = path.to_str().unwrap().to_string();
            full.extend(["--out", &p]);
            assert_eq!(linfield(&full).status.code(), Some(0));
            texts.push(std::fs::read_to_string(&path).unwrap());
        }
        assert_eq!(strip_timing(&texts[0]), strip_timing(&texts[1]), "{args:?}");
        // Only the timing line may differ in the raw bytes.
        let a: Vec<&str> = texts[0].lines().filter(|l| !l.contains("elapsed_ms")).collect();
        let b: Vec<&str> = texts[1].lines().filter(|l| !l.contains("elapsed_ms")).collect();
        assert_eq!(a, b);
    }
}

#[test]
fn printed_polynomials_reparse() {
    for (q, field, lin) in [
        ("2", "GF(2)", "x^8+x^2+x"),
        ("2", "GF(4)", "x^4 + g*x^2 + g^2*x"),
        ("3", "GF(9)", "lin(3; g^5, 0, 1)"),
        ("4", "GF(16)", "x^16 + g^7*x^4 + x"),
    ] {
        let (_, r) = structured(&["linpoly", "projective", "--q", q, "--field", field, "--lin", lin]);
        let printed = r["input"]["lin"].as_str().unwrap().to_string();
        let printed_field = r["input"]["field"].as_str().unwrap().to_string();
        let (_, again) = structured(&["linpoly", "projective", "--q", q, "--field", &printed_field, "--lin", &printed]);
        assert_eq!(again["input"]["lin"], printed.as_str());
        assert_eq!(again["checks"], r["checks"]);
    }
    let (_, r) = structured(&["linpoly", "associate", "--q", "4", "--poly", "x^3 + g*x + 1"]);
    let lin = check(&r, "associate round trip")["values"]["lin"].as_str().unwrap().to_string();
    let (code, back) = structured(&["linpoly", "associate", "--q", "4", "--lin", &lin]);
    assert_eq!(code, 0);
    assert_eq!(check(&back, "associate round trip")["values"]["associate"], r["input"]["poly"]);
}

#[test]
fn text_is_default_and_structured_with_out() {
    let out = linfield(&["groups", "singer", "--q", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS] Singer cycle has order q^n - 1"));
    let json = linfield(&["groups", "singer", "--q", "2", "--n", "3", "--format", "structured"]);
    let v: Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["checks"][0]["values"]["order"], "7");
}

#[test]
fn thread_count_does_not_change_results() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_linfield"))
            .args(["groups", "classify", "--q", "7", "--n", "2", "--format", "structured"])
            .env("LINFIELD_THREADS", threads)
            .output()
            .unwrap();
        strip_timing(std::str::from_utf8(&out.stdout).unwrap())
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn other_commands_run() {
    for args in [
        vec!["field", "--field", "GF(3^2)"],
        vec!["linpoly", "eval", "--q", "2", "--lin", "x^4+x", "--at", "g", "--ext", "GF(4)"],
        vec!["linpoly", "roots", "--q", "2", "--lin", "x^8+x^2+x"],
        vec!["linpoly", "family", "--q", "2", "--f", "x^8+x^2+x", "--g", "x^2"],
        vec!["moore", "delta", "--q", "2", "--field", "GF(8)", "--basis", "1, g, g^2"],
        vec!["moore", "reconstruct", "--q", "2", "--field", "GF(8)", "--basis", "1, g"],
        vec!["groups", "orbits", "--q", "3", "--n", "2", "--group", "gammal"],
        vec!["groups", "fingerprint", "--q", "2", "--n", "3", "--group", "sl"],
        vec!["galois", "finite", "--q", "2", "--lin", "x^8+x^2+x"],
        vec!["galois", "psl-check", "--q", "2", "--field", "GF(2)", "--lin", "x^8+x^2+x"],
        vec!["suite", "singer"],
    ] {
        let out = linfield(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr));
    }
}
