use std::process::Command;

use weylcheck::cli::{ClassifyDocument, SweepDocument, VerifyDocument};
use weylcheck::verify::{LemmaId, Verdict, Witness};

fn weylcheck(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_weylcheck")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn verify_json(args: &[&str]) -> (i32, VerifyDocument) {
    let mut full = vec!["verify", "--format", "json"];
    full.extend_from_slice(args);
    let (code, stdout, stderr) = weylcheck(&full);
    assert!(stderr.is_empty(), "{stderr}");
    (code, serde_json::from_str(&stdout).unwrap())
}

#[test]
fn verify_e7_all_lemmas() {
    let (code, doc) = verify_json(&["--family", "E", "--rank", "7", "--node", "6"]);
    assert_eq!(code, 0);
    assert_eq!(doc.summary.fail, 0);
    assert!(doc.report.checks.iter().all(|c| c.metrics.dim_x == 27));
    assert_eq!(doc.report.checks.len(), 6);
    assert_eq!(doc.invocation, "weylcheck verify --family E --rank 7 --node 6 --lemma all --format json");
}

#[test]
fn verify_c2_split_witness() {
    let (code, doc) = verify_json(&["--family", "C", "--rank", "2", "--node", "1", "--lemma", "split"]);
    assert_eq!(code, 0);
    let c = &doc.report.checks[0];
    assert_eq!((c.lemma, c.verdict), (LemmaId::Split, Verdict::Pass));
    assert_eq!(
        c.witness,
        Some(Witness::SplitTriple { alpha: "[0,1,0]".into(), beta: "[0,1,1]".into(), sum: "[0,2,1]".into() })
    );
}

#[test]
fn verify_b3_phi_is_not_applicable_and_iso_fails() {
    let (code, doc) = verify_json(&["--family", "B", "--rank", "3", "--node", "2", "--lemma", "phi"]);
    assert_eq!(code, 0);
    assert_eq!(doc.report.checks[0].verdict, Verdict::NotApplicable);
    assert!(matches!(doc.report.checks[0].witness, Some(Witness::Root { node: 2, coefficient: 2, .. })));

    let (code, doc) = verify_json(&["--family", "B", "--rank", "3", "--node", "2", "--lemma", "iso"]);
    assert_eq!(code, 1);
    assert_eq!(doc.summary.fail, 1);
}

#[test]
fn json_documents_round_trip() {
    let (_, stdout, _) = weylcheck(&["verify", "--family", "B", "--rank", "4", "--node", "4", "--format", "json"]);
    let doc: VerifyDocument = serde_json::from_str(&stdout).unwrap();
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", stdout);

    let (code, stdout, _) = weylcheck(&["sweep", "--max-rank", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: SweepDocument = serde_json::from_str(&stdout).unwrap();
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", stdout);
    assert_eq!(doc.summary.fail, 0);
    let tally = weylcheck::cli::Summary::tally(doc.verdicts());
    assert_eq!(tally, doc.summary);
}

#[test]
fn verify_json_has_the_documented_shape() {
    let (_, stdout, _) = weylcheck(&["verify", "--family", "A", "--rank", "2", "--node", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    for key in ["family", "rank", "node", "class", "affine"] {
        assert!(v["case"].get(key).is_some(), "case.{key}");
    }
    for key in ["pass", "fail", "not_applicable"] {
        assert!(v["summary"].get(key).is_some(), "summary.{key}");
    }
    assert_eq!(v["checks"][0]["lemma"], "iso");
    assert_eq!(v["checks"][0]["metrics"]["word_w0"], "2 1");
}

#[test]
fn minimal_sweep_covers_smallest_ranks() {
    let (code, stdout, _) = weylcheck(&["sweep", "--max-rank", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: SweepDocument = serde_json::from_str(&stdout).unwrap();
    let names: Vec<String> = doc.cases.iter().map(|c| format!("{}{}", c.case.family, c.case.rank)).collect();
    for t in ["A1", "A2", "B2", "C2"] {
        assert!(names.iter().any(|n| n == t), "{t}");
    }
}

#[test]
fn classify_text_and_json() {
    let (code, stdout, _) = weylcheck(&["classify", "--family", "D", "--rank", "5", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: ClassifyDocument = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc.cominuscule.to_string(), "{1,4,5}");
    assert_eq!(doc.nodes.len(), 5);

    let (code, stdout, _) = weylcheck(&["classify", "--family", "B", "--rank", "4", "--node", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("minuscule-only"));
    assert!(stdout.contains("D5^(2)"));
}

#[test]
fn invalid_input_exits_nonzero() {
    let (code, _, stderr) = weylcheck(&["verify", "--family", "D", "--rank", "3", "--node", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not a finite Dynkin type"));
    let (code, _, _) = weylcheck(&["verify", "--family", "Q", "--rank", "3", "--node", "1"]);
    assert_ne!(code, 0);
    let (code, _, _) = weylcheck(&["verify", "--family", "A", "--rank", "3", "--node", "1", "--lemma", "nope"]);
    assert_eq!(code, 2);
    let (code, _, _) = weylcheck(&["sweep", "--max-rank", "9"]);
    assert_eq!(code, 2);
    let (code, _, _) = weylcheck(&["classify", "--family", "A", "--rank", "3", "--labeling", "bourbaki"]);
    assert_ne!(code, 0);
}
