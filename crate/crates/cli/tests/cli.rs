use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use modrep_cli::document::ErrorDocument;
use modrep_cli::{Payload, ResultDocument};
use serde_json::Value;

fn groups() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("groups")
}

fn modrep(args: &[&str], workspace: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modrep"))
        .args(args)
        .env("MODREP_WORKSPACE", workspace)
        .output()
        .unwrap()
}

fn grp(name: &str) -> String {
    groups().join(format!("{name}.grp")).to_string_lossy().into_owned()
}

fn ok_doc(out: &Output) -> ResultDocument {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    ResultDocument::from_bytes(&out.stdout).unwrap()
}

fn err_doc(out: &Output) -> ErrorDocument {
    serde_json::from_slice(out.stderr.trim_ascii()).unwrap()
}

fn no_floats(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_i64() || n.is_u64(),
        Value::Array(a) => a.iter().all(no_floats),
        Value::Object(o) => o.values().all(no_floats),
        _ => true,
    }
}

#[test]
fn chartable_of_c2() {
    let ws = tempfile::tempdir().unwrap();
    let out = modrep(&["chartable", "--group", &grp("c2"), "--p", "2", "--no-cache"], ws.path());
    let doc = ok_doc(&out);
    let Payload::Chartable { characters, .. } = &doc.payload else {
        panic!("wrong payload")
    };
    let rows: Vec<Vec<String>> = characters
        .iter()
        .map(|c| c.values.iter().map(|v| v.coefficients[0].clone()).collect())
        .collect();
    assert_eq!(rows, vec![vec!["1", "1"], vec!["1", "-1"]]);
    assert!(no_floats(&serde_json::from_slice(&out.stdout).unwrap()));
}

#[test]
fn gendecomp_slice_zero_is_decomp() {
    let ws = tempfile::tempdir().unwrap();
    let d = ok_doc(&modrep(&["decomp", "--group", &grp("s4"), "--p", "2"], ws.path()));
    let g = ok_doc(&modrep(&["gendecomp", "--group", &grp("s4"), "--p", "2"], ws.path()));
    let (Payload::Decomp { matrix, .. }, Payload::Gendecomp { slices }) = (&d.payload, &g.payload) else {
        panic!("wrong payloads")
    };
    let zero: Vec<Vec<i64>> = slices[0]
        .entries
        .iter()
        .map(|r| r.iter().map(|v| v.coefficients[0].parse().unwrap()).collect())
        .collect();
    assert_eq!(&zero, matrix);
}

#[test]
fn tame_report_for_sl27() {
    let ws = tempfile::tempdir().unwrap();
    let doc = ok_doc(&modrep(&["tame-report", "--group", &grp("sl2_7"), "--p", "2"], ws.path()));
    let Payload::TameReport(r) = &doc.payload else { panic!("wrong payload") };
    assert_eq!(r.mod2_rings, vec!["k[[t]]/(t^3)"]);
    assert_eq!(r.complete_intersection, Some(true));
}

#[test]
fn deform_with_rep_file() {
    let ws = tempfile::tempdir().unwrap();
    let rep = ws.path().join("rep.json");
    std::fs::write(&rep, r#"{"p": 2, "e": 1, "generators": [[[1]]]}"#).unwrap();
    let doc = ok_doc(&modrep(
        &["deform", "--group", &grp("c2"), "--p", "2", "--rep", rep.to_str().unwrap()],
        ws.path(),
    ));
    let Payload::Deform(d) = &doc.payload else { panic!("wrong payload") };
    assert_eq!((d.h1, d.h2), (1, 1));
    assert_eq!(d.presentation.relations.len(), 1);
    assert!(d.universal);
}

#[test]
fn exit_codes() {
    let ws = tempfile::tempdir().unwrap();
    let bad = ws.path().join("bad.grp");
    std::fs::write(&bad, "domain 3\ngen (1 2)(2 3)\n").unwrap();
    let out = modrep(&["chartable", "--group", bad.to_str().unwrap(), "--p", "2"], ws.path());
    assert_eq!(out.status.code(), Some(2));
    let e = err_doc(&out);
    assert_eq!((e.error.kind.as_str(), e.error.line, e.error.column), ("input", Some(2), Some(11)));

    let out = modrep(&["chartable", "--group", &grp("c2"), "--p", "4"], ws.path());
    assert_eq!(out.status.code(), Some(2));

    let out = modrep(&["deform", "--group", &grp("a5"), "--p", "2", "--no-cache"], ws.path());
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(err_doc(&out).error.kind, "budget");

    let out = modrep(&["tame-report", "--group", &grp("s4"), "--p", "2", "--no-cache"], ws.path());
    assert_eq!(out.status.code(), Some(2));
    let out = modrep(&["tame-report", "--group", &grp("a4"), "--p", "2", "--no-cache"], ws.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn internal_errors_exit_4() {
    let e = modrep_cli::CliError::Core(modrep::Error::CensusViolation("x".into()));
    assert_eq!(e.exit_code(), 4);
    assert_eq!(e.to_document().error.kind, "internal");
}

fn entries(dir: &Path) -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    v.sort();
    v
}

#[test]
fn cache_hits_and_poisoning() {
    let ws = tempfile::tempdir().unwrap();
    let args = ["blocks", "--group", &grp("s4"), "--p", "2"];
    let first = modrep(&args, ws.path());
    assert!(first.status.success());
    let files = entries(ws.path());
    assert_eq!(files.len(), 1);
    let second = modrep(&args, ws.path());
    assert_eq!(first.stdout, second.stdout);
    assert!(second.stderr.is_empty());

    let raw = std::fs::read(&files[0]).unwrap();
    std::fs::write(&files[0], &raw[..raw.len() / 2]).unwrap();
    let third = modrep(&args, ws.path());
    assert_eq!(first.stdout, third.stdout);
    assert!(String::from_utf8_lossy(&third.stderr).contains("warning"));
    assert_eq!(std::fs::read(&files[0]).unwrap(), raw);

    let fresh = modrep(&["blocks", "--group", &grp("s4"), "--p", "2", "--no-cache"], ws.path());
    assert_eq!(first.stdout, fresh.stdout);

    let seeded = modrep(&["blocks", "--group", &grp("s4"), "--p", "2", "--seed", "9"], ws.path());
    assert!(seeded.status.success());
    assert_eq!(entries(ws.path()).len(), 2);
}

#[test]
fn documents_round_trip() {
    let ws = tempfile::tempdir().unwrap();
    for cmd in ["chartable", "simples", "decomp", "gendecomp", "blocks", "cohomology"] {
        let path = ws.path().join(format!("{cmd}.out.json"));
        let out = modrep(
            &[cmd, "--group", &grp("s3"), "--p", "2", "--out", path.to_str().unwrap()],
            ws.path(),
        );
        assert!(out.status.success());
        let bytes = std::fs::read(&path).unwrap();
        let doc = ResultDocument::from_bytes(&bytes).unwrap();
        assert_eq!(doc.to_bytes(), bytes);
        assert_eq!(ResultDocument::from_bytes(&doc.to_bytes()).unwrap(), doc);
        assert!(no_floats(&serde_json::from_slice(&bytes).unwrap()));
    }
}

#[test]
fn library_groups_match_files() {
    let ws = tempfile::tempdir().unwrap();
    for (file, lib) in [("sl2_7", "sl2_7"), ("a5", "a5"), ("q8", "q8")] {
        let a = ok_doc(&modrep(&["chartable", "--group", &grp(file), "--p", "2"], ws.path()));
        let b = ok_doc(&modrep(&["chartable", "--group", &format!("lib:{lib}"), "--p", "2"], ws.path()));
        assert_eq!(a.group.order, b.group.order);
        assert_eq!(a.payload, b.payload);
    }
}
