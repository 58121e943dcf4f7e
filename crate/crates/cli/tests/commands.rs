use std::path::PathBuf;

use homsuper_cli::run;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn exec(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("homsuper").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn lie_superalgebra_file_passes() {
    let (code, out, _) = exec(&[
        "check",
        &fixture("osp12.alg"),
        "--identity",
        "hom-lie-super",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("hom-lie-super: pass"));
}

#[test]
fn twisted_table_with_identity_fails_at_h_f_f() {
    let (code, out, _) = exec(&[
        "check",
        &fixture("osp12_lambda_id.alg"),
        "--identity",
        "hom-lie-super",
        "--format",
        "json",
        "--max-violations",
        "1000",
    ]);
    assert_eq!(code, 1);
    let doc: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    let hff = doc["violations"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["inputs"] == serde_json::json!(["H", "F", "F"]))
        .unwrap();
    assert_eq!(hff["residual"], "4*(lambda-1)/lambda^4 * Y");
}

#[test]
fn evaluated_column() {
    let (code, out, _) = exec(&[
        "check",
        &fixture("osp12_lambda_id.alg"),
        "--identity",
        "hom-lie-super",
        "--at",
        "lambda=2",
        "--max-violations",
        "1000",
    ]);
    assert_eq!(code, 1);
    let line = out.lines().find(|l| l.contains("(H, F, F)")).unwrap();
    assert!(line.ends_with("[evaluated: 1/4 * Y]"), "{line}");
    let (code, out, _) = exec(&[
        "check",
        &fixture("osp12_lambda_id.alg"),
        "--identity",
        "hom-lie-super",
        "--at",
        "lambda=0",
        "--max-violations",
        "1000",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("undefined"));
}

#[test]
fn truncation_keeps_full_counts() {
    let (code, out, _) = exec(&[
        "check",
        &fixture("osp12_lambda_id.alg"),
        "--identity",
        "hom-lie-super",
        "--format",
        "json",
        "--max-violations",
        "3",
    ]);
    assert_eq!(code, 1);
    let doc: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(doc["violations"].as_array().unwrap().len(), 3);
    assert_eq!(doc["examined"], 150);
    assert!(doc["total_violations"].as_u64().unwrap() > 3);
    for key in ["check", "status", "violations", "examined", "version"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn json_is_byte_deterministic() {
    for args in [
        vec![
            "check",
            "FILE",
            "--identity",
            "hom-lie-super",
            "--format",
            "json",
        ],
        vec![
            "check",
            "FILE",
            "--identity",
            "admissible",
            "--mode",
            "s-criterion",
            "--format",
            "json",
        ],
        vec![
            "qwitt", "--window", "-2:2", "--check", "jacobi", "--format", "json",
        ],
    ] {
        let file = fixture("osp12_lambda_id.alg");
        let args: Vec<&str> = args
            .iter()
            .map(|a| if *a == "FILE" { file.as_str() } else { a })
            .collect();
        let (c1, o1, _) = exec(&args);
        let (c2, o2, _) = exec(&args);
        assert_eq!(c1, c2);
        assert_eq!(o1, o2);
    }
}

#[test]
fn passing_json_report_has_empty_violations() {
    let (code, out, _) = exec(&[
        "qwitt",
        "--window",
        "-1:1",
        "--check",
        "structure",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""status":"pass""#));
    assert!(out.contains(r#""violations":[]"#));
}

#[test]
fn qwitt_checks() {
    for check in ["jacobi", "structure", "conditions"] {
        let (code, out, _) = exec(&["qwitt", "--window", "-2:2", "--check", check]);
        assert_eq!(code, 0, "{out}");
    }
    let (code, _, err) = exec(&["qwitt", "--window", "3:-3", "--check", "jacobi"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn every_identity_runs() {
    let file = fixture("assoc_grassmann.alg");
    for id in [
        "hom-assoc",
        "admissible",
        "g-assoc:G1",
        "g-assoc:G5",
        "g-assoc:g6",
        "hom-leibniz",
    ] {
        let (code, out, err) = exec(&["check", &file, "--identity", id]);
        if id == "hom-leibniz" {
            assert_eq!(code, 2, "odd basis is unsupported: {err}");
        } else {
            assert_eq!(code, 0, "{id}: {out}");
        }
    }
    let (code, _, _) = exec(&[
        "check",
        &file,
        "--identity",
        "admissible",
        "--mode",
        "jacobi",
    ]);
    assert_eq!(code, 0);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["check"],
        vec!["check", "x.alg", "--identity", "nonsense"],
        vec!["check", "x.alg", "--identity", "g-assoc:G9"],
        vec!["qwitt", "--window", "-2:2", "--check", "everything"],
        vec!["builtin", "sl2"],
        vec!["qwitt", "--window", "-2:2", "--check", "jacobi", "--bogus"],
    ] {
        let (code, _, err) = exec(&args);
        assert_eq!(code, 2, "{args:?}: {err}");
    }
    let (code, _, _) = exec(&[
        "check",
        &fixture("osp12.alg"),
        "--identity",
        "hom-assoc",
        "--mode",
        "jacobi",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn parse_errors_exit_two() {
    let (code, _, err) = exec(&[
        "check",
        &fixture("undeclared.alg"),
        "--identity",
        "hom-lie-super",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("3:17") && err.contains("`X`"), "{err}");
    let (code, _, err) = exec(&["check", &fixture("uneven.alg"), "--identity", "hom-assoc"]);
    assert_eq!(code, 2);
    assert!(err.contains("(e, e, f)"), "{err}");
    let (code, _, _) = exec(&["check", &fixture("missing.alg"), "--identity", "hom-assoc"]);
    assert_eq!(code, 2);
}

#[test]
fn builtin_export_and_twist_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let exported = dir.path().join("osp12.alg");
    let (code, _, _) = exec(&["builtin", "osp12", "--export", exported.to_str().unwrap()]);
    assert_eq!(code, 0);
    let twisted = dir.path().join("twisted.alg");
    let (code, _, err) = exec(&[
        "twist",
        exported.to_str().unwrap(),
        "--alpha",
        &fixture("alpha_lambda.map"),
        "--out",
        twisted.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let (code, out, _) = exec(&[
        "check",
        twisted.to_str().unwrap(),
        "--identity",
        "hom-lie-super",
    ]);
    assert_eq!(code, 0, "{out}");
    // the twisted file agrees with the builtin family apart from its name
    let (_, builtin_text, _) = exec(&["builtin", "osp12-lambda"]);
    let written = std::fs::read_to_string(&twisted).unwrap();
    let body = |t: &str| t.lines().skip(1).map(str::to_owned).collect::<Vec<_>>();
    assert_eq!(body(&written), body(&builtin_text));
}

#[test]
fn twist_refuses_non_endomorphism() {
    let (code, out, err) = exec(&[
        "twist",
        &fixture("osp12.alg"),
        "--alpha",
        &fixture("alpha_bad.map"),
    ]);
    assert_eq!(code, 1);
    assert!(out.starts_with("endomorphism: fail"));
    assert!(err.contains("refused"));
}

#[test]
fn morphism_command() {
    let a = fixture("osp12.alg");
    let (code, _, _) = exec(&["morphism", &a, &a, "--map", &fixture("scale.map")]);
    assert_eq!(code, 0);
    let (code, out, _) = exec(&["morphism", &a, &a, "--map", &fixture("drop_odd.map")]);
    assert_eq!(code, 1);
    assert!(out.contains("(F, F): -2 * Y"), "{out}");
}

#[test]
fn help_and_version_exit_zero() {
    let (code, out, _) = exec(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("qwitt"));
    let (code, out, _) = exec(&["--version"]);
    assert_eq!(code, 0);
    assert!(out.contains("0.1.0"));
}
