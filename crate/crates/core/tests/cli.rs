use std::path::Path;
use std::process::Command;

use hopfcoh::document::AlgebraDocument;
use hopfcoh::hopf::builtin::*;
use hopfcoh::FieldSpec;
use serde_json::Value;

fn hopfcoh(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcoh")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap() + &String::from_utf8(out.stderr).unwrap())
}

fn export(dir: &Path, name: &str, extra: &[&str]) -> String {
    let path = dir.join(format!("{name}.json"));
    let p = path.to_str().unwrap().to_string();
    let mut args = vec!["export", name, "--out", &p];
    args.extend_from_slice(extra);
    let (code, out) = hopfcoh(&args);
    assert_eq!(code, 0, "{out}");
    p
}

#[test]
fn export_round_trips_bit_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let path = export(dir.path(), "sweedler", &[]);
    let text = std::fs::read_to_string(&path).unwrap();
    let doc = AlgebraDocument::from_json(&text).unwrap();
    assert_eq!(doc.to_json() + "\n", text);
    let p = doc.hopf().unwrap();
    let q = sweedler(FieldSpec::Rationals).unwrap();
    assert_eq!((p.mult(), p.comult(), p.unit(), p.counit(), p.antipode()), (q.mult(), q.comult(), q.unit(), q.counit(), q.antipode()));
    assert_eq!(doc.ideal_names(), ["x_plus_gx", "one_minus_g"]);
    let (code, stdout) = hopfcoh(&["export", "sweedler"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, text);
}

#[test]
fn validate_reports_every_axiom() {
    let dir = tempfile::tempdir().unwrap();
    let path = export(dir.path(), "taft3", &["--field", "F7"]);
    let (code, out) = hopfcoh(&["validate", &path, "--format", "json"]);
    assert_eq!(code, 0, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 12);
    assert_eq!(v["tables"]["normalised_integral"], false);
}

#[test]
fn corrupted_counit_is_a_named_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = export(dir.path(), "kZ2", &[]);
    let mut doc = AlgebraDocument::read(Path::new(&path)).unwrap();
    doc.counit[1] = ("0".into(), "1".into());
    std::fs::write(&path, doc.to_json()).unwrap();
    let (code, out) = hopfcoh(&["validate", &path]);
    assert_eq!(code, 1);
    assert!(out.contains("[FAIL] counit multiplicative"), "{out}");
    // other commands refuse an invalid algebra as input
    let (code, _) = hopfcoh(&["cohomology", &path, "--ideal", "zero"]);
    assert_eq!(code, 2);
}

#[test]
fn parse_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let p = group_algebra(&FiniteGroup::cyclic(2), FieldSpec::Rationals).unwrap();
    let text = AlgebraDocument::from_hopf(&p).to_json().replace("\"labels\"", "\"names\"");
    std::fs::write(&path, text).unwrap();
    let (code, out) = hopfcoh(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.contains("names") && out.contains("line"), "{out}");
    std::fs::write(&path, "{").unwrap();
    assert_eq!(hopfcoh(&["validate", path.to_str().unwrap()]).0, 2);
}

#[test]
fn exit_codes() {
    assert_eq!(hopfcoh(&["cohomology", "builtin:fZ2", "--ideal", "zero"]).0, 0);
    assert_eq!(hopfcoh(&["hopflie", "builtin:fZ2", "--ideal", "zero"]).0, 0);
    assert_eq!(hopfcoh(&["vanest", "builtin:fZ2", "--ideal", "zero"]).0, 0);
    assert_eq!(hopfcoh(&["spectral", "--count", "2"]).0, 0);
    // braiding defect in characteristic 2
    let (code, out) = hopfcoh(&["hopflie", "builtin:fZ3", "--ideal", "zero", "--field", "F2"]);
    assert_eq!(code, 1);
    assert!(out.contains("braiding defect"), "{out}");
    // invalid ideal, unknown ideal, bad flags
    let dir = tempfile::tempdir().unwrap();
    let path = export(dir.path(), "sweedler", &[]);
    let mut doc = AlgebraDocument::read(Path::new(&path)).unwrap();
    doc.ideals[0].vectors = vec![vec![("1".into(), "1".into()), ("0".into(), "1".into()), ("0".into(), "1".into()), ("0".into(), "1".into())]];
    std::fs::write(&path, doc.to_json()).unwrap();
    let (code, out) = hopfcoh(&["cohomology", &path, "--ideal", "x_plus_gx"]);
    assert_eq!(code, 2);
    assert!(out.contains("invalid calculus ideal"), "{out}");
    assert_eq!(hopfcoh(&["validate", &path]).0, 1);
    assert_eq!(hopfcoh(&["cohomology", &path, "--ideal", "nope"]).0, 2);
    assert_eq!(hopfcoh(&["cohomology", &path, "--ideal", "zero", "--universal"]).0, 2);
    assert_eq!(hopfcoh(&["cohomology", &path, "--ideal", "zero", "--field", "F3"]).0, 2);
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let run = || {
        let (_, out) = hopfcoh(&["vanest", "builtin:kZ3", "--universal", "--format", "json"]);
        let mut v: Value = serde_json::from_str(&out).unwrap();
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    let a = run();
    assert_eq!(a, run());
    assert_eq!(a["tables"]["e2_ii"][0][0], 1);
    assert_eq!(a["tables"]["e2_ii"][0][1], 0);
    assert_eq!(a["tables"]["e2_ii"][1][0], 0);
}
