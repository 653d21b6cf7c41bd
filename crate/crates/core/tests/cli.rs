use std::io::Write;
use std::process::{Command, Stdio};

use linklab::cli::{lemma32_report, parse_pairs, run, MinorReport, EXIT_FAILURE, EXIT_INPUT, EXIT_OK};
use linklab::invariants::{FuzzSummary, LinkReport, VerifyReport};
use linklab::io::{parse_document, parse_report, EmbeddingDocument};

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");

fn fixture(name: &str) -> String {
    format!("{FIXTURES}/{name}")
}

fn linklab(args: &[&str], stdin: &[u8]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("linklab").chain(args.iter().copied());
    let code = run(argv, &mut &stdin[..], &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn pairs_lists_ten_records() {
    let (code, out, _) = linklab(&["pairs"], b"");
    assert_eq!(code, EXIT_OK);
    assert_eq!(parse_pairs(out.as_bytes()).unwrap().len(), 10);
}

#[test]
fn lambda_of_moment_fixture() {
    let (code, out, _) = linklab(&["lambda", &fixture("moment_k6.json"), "--seed", "4"], b"");
    assert_eq!(code, EXIT_OK);
    let r: LinkReport = parse_report(out.as_bytes()).unwrap();
    assert_eq!((r.value, r.seed), (Some(1), 4));
    // Same arguments, same bytes.
    assert_eq!(linklab(&["lambda", &fixture("moment_k6.json"), "--seed", "4"], b"").1, out);
}

#[test]
fn sigma6_pipes_into_biglambda() {
    let (code, doc, _) = linklab(&["sigma6", "--base", "moment"], b"");
    assert_eq!(code, EXIT_OK);
    assert!(matches!(parse_document(doc.as_bytes()).unwrap(), EmbeddingDocument::EmbeddedSuspension(_)));
    let (code, out, _) = linklab(&["biglambda", "-"], doc.as_bytes());
    assert_eq!(code, EXIT_OK);
    let r: LinkReport = parse_report(out.as_bytes()).unwrap();
    assert_eq!(r.value, Some(1));

    let (code, doc, _) = linklab(&["sigma6", "--base", "random", "--seed", "12"], b"");
    assert_eq!(code, EXIT_OK);
    let (code, out, _) = linklab(&["verify", "-"], doc.as_bytes());
    assert_eq!(code, EXIT_OK);
    assert!(parse_report::<VerifyReport>(out.as_bytes()).unwrap().valid);
}

#[test]
fn minor_suspend_and_lemma32() {
    let (code, out, _) = linklab(&["minor", &fixture("petersen.json")], b"");
    assert_eq!(code, EXIT_OK);
    assert_eq!(parse_report::<MinorReport>(out.as_bytes()).unwrap(), MinorReport { has_k6_minor: false });
    let (_, out, _) = linklab(&["minor", &fixture("k6_graph.json")], b"");
    assert!(parse_report::<MinorReport>(out.as_bytes()).unwrap().has_k6_minor);

    let (code, out, _) = linklab(&["suspend", &fixture("k6_graph.json")], b"");
    assert_eq!(code, EXIT_OK);
    let EmbeddingDocument::TwoComplex(d) = parse_document(out.as_bytes()).unwrap() else {
        panic!("expected a two-complex");
    };
    assert_eq!((d.vertex_count, d.edges.len(), d.faces.len()), (8, 27, 30));

    let (code, out, _) = linklab(&["lemma32"], b"");
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, linklab::io::to_json(&lemma32_report().unwrap()));
}

#[test]
fn exit_codes() {
    let (code, _, err) = linklab(&["lambda", "/nonexistent.json"], b"");
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("reading"));
    let bad = br#"{"schemaVersion": "1", "kind": "embedded-k6", "vertices": [["1/0", "0", "0"]]}"#;
    let (code, _, err) = linklab(&["lambda", "-"], bad);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("zero denominator") && err.contains("vertices[0][0]"), "{err}");
    let (code, _, _) = linklab(&["lambda", &fixture("petersen.json")], b"");
    assert_eq!(code, EXIT_INPUT);
    let (code, _, _) = linklab(&["frobnicate"], b"");
    assert_eq!(code, EXIT_INPUT);
    let (code, out, _) = linklab(&["--help"], b"");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("biglambda"));

    // A planar K6 is a verification failure, with the report still emitted.
    let planar = r#"{"schemaVersion": "1", "kind": "embedded-k6", "vertices": [
        ["0","0","0"], ["1","1","0"], ["2","4","0"], ["3","9","0"], ["4","16","0"], ["5","25","0"]]}"#;
    let (code, out, _) = linklab(&["verify", "-"], planar.as_bytes());
    assert_eq!(code, EXIT_FAILURE);
    assert!(!parse_report::<VerifyReport>(out.as_bytes()).unwrap().valid);
    let (code, out, _) = linklab(&["lambda", "-"], planar.as_bytes());
    assert_eq!((code, out.as_str()), (EXIT_FAILURE, ""));
}

#[test]
fn fuzz_and_output_file() {
    let dir = std::env::temp_dir().join(format!("linklab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fuzz.json");
    let p = path.to_str().unwrap();
    let (code, out, _) = linklab(&["fuzz", "--trials", "2", "--seed", "5", "--jobs", "2", "-o", p], b"");
    assert_eq!((code, out.as_str()), (EXIT_OK, ""));
    let s: FuzzSummary = parse_report(&std::fs::read(&path).unwrap()).unwrap();
    assert!(s.ok);
    assert_eq!(s.outcomes.len(), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_reads_env_seed_and_pipes() {
    let bin = env!("CARGO_BIN_EXE_linklab");
    let sigma = Command::new(bin).args(["sigma6", "--base", "moment"]).output().unwrap();
    assert!(sigma.status.success());
    let mut child = Command::new(bin)
        .args(["biglambda", "-"])
        .env("LINKLAB_SEED", "77")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&sigma.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r: LinkReport = parse_report(&out.stdout).unwrap();
    assert_eq!((r.value, r.seed), (Some(1), 77));

    let bad = Command::new(bin).args(["minor", "/nonexistent.json"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
