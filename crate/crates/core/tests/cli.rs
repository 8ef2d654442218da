use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const BRANCHED5: &str = "0 0\n0 1\n1 1\n2 0\n-1 2\n";
const PYRENE: &str = "0 0\n1 0\n0 1\n1 1\n";
const HEXAGON: &str = "0 0\n";

fn rescube(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_rescube"));
    c.args(args).env_remove("RESCUBE_CAP");
    for (k, v) in envs {
        c.env(k, v);
    }
    c.output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn check_verdicts() {
    let d = TempDir::new().unwrap();
    let fig = write(&d, "fig.hex", BRANCHED5);
    let o = rescube(&["check", s(&fig)], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["peripherally_two_colorable"], true);

    let pyr = write(&d, "pyr.hex", PYRENE);
    let o = rescube(&["check", s(&pyr)], &[]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["peripherally_two_colorable"], false);
    assert_eq!(v["violation"]["clause"], "interior_degree_three");

    let bad = write(&d, "bad.json", "{\"vertices\": [");
    assert_eq!(rescube(&["check", s(&bad)], &[]).status.code(), Some(1));
}

#[test]
fn resonance_files() {
    let d = TempDir::new().unwrap();
    let hex = write(&d, "c6.hex", HEXAGON);
    let dot = d.path().join("r.dot");
    let out = d.path().join("r.json");
    let o = rescube(&["resonance", s(&hex), "--emit-dot", s(&dot), "-o", s(&out)], &[]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(text.matches(';').count() - text.matches("--").count(), 2);
    assert_eq!(text.matches("--").count(), 1);

    let fig = write(&d, "fig.hex", BRANCHED5);
    let v = json(&rescube(&["resonance", s(&fig)], &[]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 14);
    let edges = v["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 23);
    assert!(edges.iter().all(|e| e["face"].as_str().unwrap().starts_with('s')));

    let o = rescube(&["resonance", s(&fig)], &[("RESCUBE_CAP", "5")]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn labels_and_verification() {
    let d = TempDir::new().unwrap();
    let fig = write(&d, "fig.hex", BRANCHED5);
    let v = json(&rescube(&["label", s(&fig), "--rfd", "s1,s2,s3,s4,s5"], &[]));
    let mut got: Vec<&str> = v["labels"].as_object().unwrap().values().map(|x| x.as_str().unwrap()).collect();
    got.sort();
    let mut want = vec![
        "00000", "10000", "01000", "00100", "10100", "00010", "10010", "01010", "00001", "10001", "00101", "10101",
        "00011", "10011",
    ];
    want.sort();
    assert_eq!(got, want);

    let v = json(&rescube(&["label", s(&fig), "--scheme", "fdl"], &[]));
    let lo = v["minimum"].as_u64().unwrap().to_string();
    let hi = v["maximum"].as_u64().unwrap().to_string();
    assert_eq!(v["labels"][&lo], "00000");
    assert_eq!(v["labels"][&hi], "11111");

    let dot = d.path().join("l.dot");
    let o = rescube(&["label", s(&fig), "--verify", "--emit-dot", s(&dot)], &[]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let checks = v["verification"].as_array().unwrap();
    assert!(checks.len() > 100);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    assert!(std::fs::read_to_string(&dot).unwrap().contains("label=\"00000\""));
}

#[test]
fn rfd_and_verify() {
    let d = TempDir::new().unwrap();
    let fig = write(&d, "fig.hex", BRANCHED5);
    let v = json(&rescube(&["rfd", s(&fig), "--rfd", "s1,s2,s3,s4,s5"], &[]));
    assert_eq!(v["alpha"]["s5"], "s2");
    let o = rescube(&["rfd", s(&fig), "--rfd", "s1,s3,s2,s4,s5"], &[]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(rescube(&["rfd", s(&fig), "--rfd", "s9"], &[]).status.code(), Some(1));

    let o = rescube(&["verify", s(&fig)], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["passed"], true);

    let pyr = write(&d, "pyr.hex", PYRENE);
    assert_eq!(rescube(&["verify", s(&pyr)], &[]).status.code(), Some(2));
}

#[test]
fn import_roundtrip_and_determinism() {
    let d = TempDir::new().unwrap();
    let fig = write(&d, "fig.hex", BRANCHED5);
    let graph = d.path().join("fig.json");
    assert_eq!(rescube(&["import-benzenoid", s(&fig), "-o", s(&graph)], &[]).status.code(), Some(0));
    let a = rescube(&["label", s(&graph)], &[]);
    let b = rescube(&["label", s(&graph)], &[]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["labels"].as_object().unwrap().len(), 14);
    let r1 = rescube(&["resonance", s(&graph)], &[]).stdout;
    let r2 = rescube(&["resonance", s(&graph)], &[]).stdout;
    assert_eq!(r1, r2);
}

#[test]
fn weakly_elementary_input() {
    let d = TempDir::new().unwrap();
    let two = write(&d, "two.hex", "0 0\n3 0\n");
    let v = json(&rescube(&["label", s(&two), "--verify"], &[]));
    let mut got: Vec<&str> = v["labels"].as_object().unwrap().values().map(|x| x.as_str().unwrap()).collect();
    got.sort();
    assert_eq!(got, vec!["00", "01", "10", "11"]);
    assert!(v["verification"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn usage_errors() {
    assert_eq!(rescube(&[], &[]).status.code(), Some(1));
    assert_eq!(rescube(&["--help"], &[]).status.code(), Some(0));
    assert_eq!(rescube(&["label", "x", "--scheme", "other"], &[]).status.code(), Some(1));
}
