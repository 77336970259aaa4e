use std::process::{Command, Output};

use circbook::EmbeddingDocument;

fn circbook(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circbook"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn classify_examples() {
    for (args, want) in [
        (["60", "28", "35"], "bundle: 1 × C_4 □^5 C_15"),
        (["14", "5", "7"], "union: 1 × C(14,7)"),
        (["24", "4", "12"], "union: 4 × C(6,3)"),
    ] {
        let mut full = vec!["classify"];
        full.extend(args);
        full.push("--certify");
        let out = circbook(&full);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = stdout(&out);
        assert_eq!(text.lines().next(), Some(want));
        assert!(text.contains("certificate ok"));
    }
}

#[test]
fn classify_json() {
    let out = circbook(&["classify", "60", "28", "35", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["family"]["kind"], "bundle_union");
    assert_eq!(v["family"]["shift"], 5);
    assert_eq!(v["summary"], "bundle: 1 × C_4 □^5 C_15");
}

#[test]
fn bad_input_is_usage_error() {
    assert_eq!(
        circbook(&["classify", "10", "3", "7"]).status.code(),
        Some(2)
    );
    assert_eq!(
        circbook(&["classify", "ten", "3", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(circbook(&["embed", "10", "6"]).status.code(), Some(2));
    assert_eq!(circbook(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn embed_writes_document_svg_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("c14_5.json");
    let svg = dir.path().join("c14_5.svg");
    let dot = dir.path().join("c14_5.dot");
    let out = circbook(&[
        "embed",
        "14",
        "5",
        "--out",
        json.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = EmbeddingDocument::from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!((doc.n, doc.pages), (14, 4));
    let svg = std::fs::read_to_string(&svg).unwrap();
    assert!(svg.contains(r#"version="1.1""#));
    assert_eq!(svg.matches("<line ").count(), 28);
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("graph "));

    let verified = circbook(&["verify", json.to_str().unwrap()]);
    assert_eq!(verified.status.code(), Some(0));
}

#[test]
fn embed_to_stdout() {
    for (n, k, pages) in [("12", "6", 4), ("5", "2", 5)] {
        let out = circbook(&["embed", n, k]);
        assert_eq!(out.status.code(), Some(0));
        let doc = EmbeddingDocument::from_json(&stdout(&out)).unwrap();
        assert_eq!(doc.pages, pages);
    }
}

#[test]
fn verify_rejects_tampered_document() {
    let dir = tempfile::tempdir().unwrap();
    let out = circbook(&["embed", "9", "3"]);
    let mut doc = EmbeddingDocument::from_json(&stdout(&out)).unwrap();
    let page = doc.edges[0].page;
    doc.edges[1].page = page;
    doc.edges[2].page = page;
    let path = dir.path().join("bad.json");
    std::fs::write(&path, doc.to_json()).unwrap();
    assert_eq!(
        circbook(&["verify", path.to_str().unwrap()]).status.code(),
        Some(3)
    );
}

#[test]
fn oracle_values() {
    for (n, k, want) in [("9", "3", "5"), ("4", "1", "2"), ("8", "3", "4")] {
        let out = circbook(&["oracle", n, k]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out).trim(), want);
    }
    assert_eq!(circbook(&["oracle", "11", "2"]).status.code(), Some(2));
}

#[test]
fn sweep_report_rows() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let out = Command::new(env!("CARGO_BIN_EXE_circbook"))
        .args([
            "sweep",
            "--n-max",
            "12",
            "--oracle-max",
            "7",
            "--report",
            report.to_str().unwrap(),
        ])
        .env("CIRC_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let rows = v["rows"].as_array().unwrap();
    let expected: usize = (3..=12).map(|n| n / 2).sum();
    assert_eq!(rows.len(), expected);
    assert!(rows
        .iter()
        .all(|r| r["route"].is_string() && r["ok"] == true));
    assert_eq!(circbook(&["sweep", "--n-max", "3"]).status.code(), Some(0));
}

#[test]
fn bad_thread_count_is_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_circbook"))
        .args(["sweep", "--n-max", "3"])
        .env("CIRC_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
