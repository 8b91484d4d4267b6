use std::process::Command;

use fibluc::json::JsonRecord;

fn fibluc(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fibluc"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn eval_examples() {
    assert_eq!(fibluc(&["eval", "F", "6"]).1, "x^5 + 4*x^3*y + 3*x*y^2\n");
    assert_eq!(fibluc(&["eval", "L", "1"]).1, "x\n");
    assert_eq!(fibluc(&["eval", "F", "10", "--at", "1,1"]).1, "55\n");
    assert_eq!(fibluc(&["eval", "F", "5", "--at", "1/2,-1"]).1, "5/16\n");
    assert_eq!(fibluc(&["eval", "L", "0", "--x", "D", "--y", "-y"]).1, "2\n");
    assert_eq!(fibluc(&["eval", "L", "3", "--x", "D", "--y", "-y"]).1, "(0) + (x^2 + y)*D\n");
}

#[test]
fn eval_identity_substitution_is_byte_identical() {
    for kind in ["F", "L"] {
        for n in ["0", "1", "7", "15"] {
            let plain = fibluc(&["eval", kind, n]);
            let subst = fibluc(&["eval", kind, n, "--x", "x", "--y", "y"]);
            assert_eq!(plain, subst);
        }
    }
}

#[test]
fn eval_errors_exit_2() {
    let (code, _, err) = fibluc(&["eval", "F", "3", "--x", "x +"]);
    assert_eq!(code, 2);
    assert!(err.contains("column"), "{err}");
    assert_eq!(fibluc(&["eval", "F", "3", "--x", "F[n]"]).0, 2);
    assert_eq!(fibluc(&["eval", "F", "3", "--at", "1"]).0, 2);
    assert_eq!(fibluc(&["eval", "Q", "3"]).0, 2);
    assert_eq!(fibluc(&["eval", "F", "-3"]).0, 2);
}

#[test]
fn sequence_examples() {
    let lines = |args: &[&str]| fibluc(args).1.split_whitespace().map(String::from).collect::<Vec<_>>();
    assert_eq!(lines(&["sequence", "F", "--x", "1", "--y", "1", "--count", "8"]), ["0", "1", "1", "2", "3", "5", "8", "13"]);
    assert_eq!(lines(&["sequence", "L", "--x", "1", "--y", "1", "--count", "6"]), ["2", "1", "3", "4", "7", "11"]);
    assert_eq!(lines(&["sequence", "F", "--x", "2", "--y", "1", "--count", "6"]), ["0", "1", "2", "5", "12", "29"]);
    assert_eq!(lines(&["sequence", "F", "--x", "1/2", "--y", "1", "--count", "4"]), ["0", "1", "1/2", "5/4"]);
    assert_eq!(fibluc(&["sequence", "F", "--count", "0"]).0, 2);
    let (code, out, _) = fibluc(&["--json", "sequence", "L", "--count", "3"]);
    assert_eq!(code, 0);
    assert_eq!(serde_json::from_str::<Vec<String>>(&out).unwrap(), ["2", "1", "3"]);
}

#[test]
fn catalog_exit_codes() {
    assert_eq!(fibluc(&["catalog", "--ids", "EQ15", "--n-max", "1"]).0, 0);
    let (code, _, err) = fibluc(&["catalog", "--ids", "EQ99"]);
    assert_eq!(code, 2);
    assert!(err.contains("EQ99"));
    assert_eq!(fibluc(&["catalog", "--n-max", "0"]).0, 2);
    assert_eq!(fibluc(&["catalog", "--bogus"]).0, 2);
}

#[test]
fn verify_examples() {
    assert_eq!(fibluc(&["verify", "y*F[n-1]+F[n+1]=L[n]", "--range", "n=1..10"]).0, 0);
    assert_eq!(fibluc(&["verify", "F[2*n] = F[n]*L[n]", "--range", "n=0..12"]).0, 0);
    let (code, out, _) = fibluc(&["verify", "F[n]=L[n]", "--range", "n=0..2"]);
    assert_eq!(code, 1);
    assert!(out.contains("counterexample: user at n=0: lhs = 0, rhs = 2"), "{out}");
}

#[test]
fn verify_errors_exit_2() {
    let (code, _, err) = fibluc(&["verify", "F[n] = L[n"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 1, column 11"), "{err}");
    let (code, _, err) = fibluc(&["verify", "y*F[n-1] + F[n+1] = L[n]", "--range", "n=0..3"]);
    assert_eq!(code, 2);
    assert!(err.contains("n=0"), "{err}");
    assert_eq!(fibluc(&["verify", "F[n]=F[n]", "--range", "m=0..3"]).0, 2);
    assert_eq!(fibluc(&["verify", "F[n]=F[n]", "--range", "n=3..1"]).0, 2);
    assert_eq!(fibluc(&["verify"]).0, 2);
}

#[test]
fn corpus_default_and_override() {
    let (code, out, _) = fibluc(&["verify", "--corpus", "--ids", "EQ20,EQ14", "--range", "n=0..4,k=1..2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("9 cells: 9 pass"), "{out}");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mine.txt");
    std::fs::write(&path, "# id: A\nF[n] = F[n]\n# id: B n>=1\ny*F[n-1] + F[n+1] = x*F[n]\n").unwrap();
    let p = path.to_str().unwrap();
    let (code, out, _) = fibluc(&["verify", "--corpus-file", p, "--range", "n=0..3"]);
    assert_eq!(code, 1);
    assert!(out.contains("counterexample: B at n=2"), "{out}");
    assert_eq!(fibluc(&["verify", "--corpus-file", p, "--ids", "A"]).0, 0);
    assert_eq!(fibluc(&["verify", "--corpus-file", p, "--ids", "C"]).0, 2);
    assert_eq!(fibluc(&["verify", "--corpus-file", dir.path().join("none").to_str().unwrap()]).0, 2);
    assert_eq!(fibluc(&["verify", "F[n]=F[n]", "--corpus"]).0, 2);
}

#[test]
fn json_reports_one_record_per_cell() {
    let (code, out, _) = fibluc(&["--json", "catalog", "--ids", "EQ12,EQ20", "--n-max", "3", "--k-max", "2"]);
    assert_eq!(code, 0);
    let recs: Vec<JsonRecord> = serde_json::from_str(&out).unwrap();
    assert_eq!(recs.len(), 4 * 2 + 3);
    assert!(recs.iter().all(|r| r.status == "pass" && r.lhs.is_none() && r.rhs.is_none()));
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    for rec in doc.as_array().unwrap() {
        let obj = rec.as_object().unwrap();
        for key in ["id", "n", "k", "status", "elapsed_ms"] {
            assert!(obj.contains_key(key), "missing {key}");
        }
        assert!(obj["elapsed_ms"].as_f64().unwrap() >= 0.0);
    }
}

#[test]
fn json_and_text_verdicts_agree() {
    let cases: &[&[&str]] = &[
        &["verify", "L[n]^2 - (-1)^(n+1)*4*y^n = (x^2+4*y)*F[n]^2", "--range", "n=0..6"],
        &["verify", "F[n*k] = F[n]*L[k]", "--range", "n=0..3,k=1..3"],
        &["catalog", "--ids", "EQ05,EQ16", "--n-max", "3", "--k-max", "2"],
    ];
    for args in cases {
        let (tcode, text, _) = fibluc(args);
        let mut jargs = vec!["--json"];
        jargs.extend_from_slice(args);
        let (jcode, json, _) = fibluc(&jargs);
        assert_eq!(tcode, jcode);
        let recs: Vec<JsonRecord> = serde_json::from_str(&json).unwrap();
        let rows: Vec<(String, String)> = text
            .lines()
            .filter(|l| !l.starts_with(' ') && l.contains("ms"))
            .map(|l| {
                let cols: Vec<&str> = l.split_whitespace().collect();
                (cols[0].to_string(), cols[cols.len() - 2].to_ascii_lowercase())
            })
            .collect();
        assert_eq!(rows.len(), recs.len());
        for (row, rec) in rows.iter().zip(&recs) {
            assert_eq!(row, &(rec.id.clone(), rec.status.clone()));
        }
        for rec in recs.iter().filter(|r| r.status == "fail") {
            assert!(text.contains(&format!("    lhs: {}", rec.lhs.as_ref().unwrap())));
            assert!(text.contains(&format!("    rhs: {}", rec.rhs.as_ref().unwrap())));
        }
    }
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(fibluc(&["--help"]).0, 0);
    assert_eq!(fibluc(&["--version"]).0, 0);
    assert_eq!(fibluc(&[]).0, 2);
}
