use std::path::PathBuf;
use std::process::Command;

use metacover_cli::*;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_metacover")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn validate_examples() {
    let r = cmd_validate(&data("sl2.datum")).unwrap();
    assert!(r.passed());
    let r = cmd_validate(&data("bad_pairing.datum")).unwrap();
    assert!(!r.passed());
    let w = &r.ledger[0].witness;
    assert!(w.contains("4 ≠ 2") && w.contains('0'), "{w}");
    match cmd_validate(&data("empty.datum")) {
        Err(CliError::Parse { error, .. }) => assert!(error.message.contains("missing field"), "{error}"),
        other => panic!("{other:?}"),
    }
    assert!(matches!(cmd_validate("/nonexistent/file"), Err(CliError::Io(_))));
}

#[test]
fn catalog_dump_validates() {
    let dir = std::env::temp_dir().join(format!("metacover-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for name in ["SL2", "G2", "GL2xPGL2", "E6_sc"] {
        let path = dir.join(format!("{name}.datum"));
        let rd = metacover::root_data::catalog(name).unwrap();
        std::fs::write(&path, grammar::format_root_datum(&rd)).unwrap();
        assert!(cmd_validate(path.to_str().unwrap()).unwrap().passed(), "{name}");
    }
}

#[test]
fn classify_examples() {
    let r = cmd_classify(&data("sl2.datum"), 6).unwrap();
    assert_eq!((r.get("covers pi0"), r.get("covers pi1"), r.get("covers pi2")), (Some("Z/6"), Some("0"), Some("0")));
    assert!(r.passed());
    let r = cmd_classify("catalog:PGL2", 2).unwrap();
    assert_eq!((r.get("covers pi0"), r.get("covers pi1"), r.get("covers pi2")), (Some("Z/2"), Some("Z/2"), Some("Z/2")));
    let r = cmd_classify("catalog:GL2", 3).unwrap();
    assert_eq!(r.get("covers pi0"), Some("(Z/3)^2"));
    assert!(r.passed());
    assert!(cmd_classify(&data("bad_pairing.datum"), 2).is_err());
}

#[test]
fn dualize_examples() {
    let r = cmd_dualize(&data("sl2.datum"), 2, "[1]").unwrap();
    assert_eq!(r.get("Z_H"), Some("Z/2"));
    assert!(r.get("H").unwrap().contains("coroots: [[1], [-1]]"));
    assert_eq!(r.get("epsilon"), Some("[1]"));
    assert!(r.passed());
    assert_eq!(r.ledger.iter().filter(|e| e.check.starts_with("Borel")).count(), 2);
    let r = cmd_dualize(&data("sl2.datum"), 2, "0").unwrap();
    assert_eq!(r.get("Z_H"), Some("0"));
    assert!(r.get("H").unwrap().contains("coroots: [[2], [-2]]"));
    let r = cmd_dualize("catalog:GL2", 2, "x1x2").unwrap();
    assert!(r.passed());
    let r = cmd_dualize("catalog:G2", 3, "[0, 0, 0]").unwrap();
    assert_eq!(r.ledger.iter().filter(|e| e.check.starts_with("Borel")).count(), 12);
}

#[test]
fn dualize_refuses_non_strict_forms() {
    match cmd_dualize("catalog:GL2", 2, "x1^2") {
        Err(CliError::Refused(m)) => assert!(m.contains("b(α0, e1) = 0 but ⟨α̌0, e1⟩·Q(α0) = 1"), "{m}"),
        other => panic!("{other:?}"),
    }
    let (code, out, err) = run(&["dualize", "catalog:GL2", "--N", "2", "--Q", "x1^2"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("not strict"), "{err}");
}

#[test]
fn theta_and_symbol_commands() {
    let r = cmd_theta(2, 4, 2).unwrap();
    assert!(r.passed());
    assert_eq!(r.ledger.len(), 3);
    assert_eq!(cmd_hilbert("7", 2, "3", "7").unwrap().get("symbol"), Some("1"));
    assert_eq!(cmd_hilbert("7", 2, "2", "7").unwrap().get("symbol"), Some("0"));
    assert_eq!(cmd_hilbert("R", 2, "-1", "-1").unwrap().get("symbol"), Some("1"));
    assert!(cmd_hilbert("7", 4, "2", "7").is_err());
    assert!(cmd_symbol_suite("5", 4, Some("2,5,-1")).unwrap().passed());
    assert!(cmd_symbol_suite("13", 4, None).unwrap().passed());
}

#[test]
fn torus_cover_command() {
    let r = cmd_torus_cover(2, "[[0, 1], [0, 0]]", "7", 3).unwrap();
    assert!(r.passed());
    let r = cmd_torus_cover(1, "[[1]]", "5", 4).unwrap();
    assert_eq!(r.get("commutator = (c - c^T) reading"), Some("48/64"));
    assert!(matches!(cmd_torus_cover(1, "[[1]] x", "5", 4), Err(CliError::Parse { .. })));
}

#[test]
fn verify_suites() {
    for s in ["symbols", "schubert", "theta", "coherence", "linear-algebra"] {
        let r = cmd_verify(s).unwrap();
        assert!(r.passed(), "{r}");
        assert!(!r.ledger.is_empty());
    }
    assert!(cmd_verify("everything").is_err());
}

#[test]
fn reports_are_deterministic_and_exit_codes_follow_the_ledger() {
    let a = run(&["classify", "catalog:SL3", "--N", "4"]);
    let b = run(&["classify", "catalog:SL3", "--N", "4"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
    assert!(a.1.starts_with(&format!("schema: {SCHEMA}\ncommand: classify catalog:SL3 --N 4\n")));
    let bad = data("bad_pairing.datum");
    let (code, out, _) = run(&["validate", &bad]);
    assert_eq!(code, 1);
    assert!(out.contains("[FAIL] root datum axioms"));
    let (code, _, err) = run(&["validate", &data("empty.datum")]);
    assert_eq!(code, 2);
    assert!(err.contains("parse error"), "{err}");
    assert_eq!(run(&["hilbert", "--place", "R", "--", "-1", "-1"]).0, 0);
}
