//! One PASS/FAIL line per acceptance criterion. Criteria 1 to 13 come from a
//! full `artin suite` run; criterion 14 reruns it and compares artifacts.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, ExitCode};

use serde_json::Value;

const TABLE_SECONDS: f64 = 300.0;

fn run_suite(dir: &Path) -> i32 {
    let status = Command::new(env!("CARGO_BIN_EXE_artin"))
        .args(["suite", "--out"])
        .arg(dir)
        .stdout(std::process::Stdio::null())
        .status()
        .expect("artin runs");
    status.code().unwrap_or(-1)
}

/// Every artifact except the manifest, which records wall time.
fn artifacts(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut out = BTreeMap::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for e in std::fs::read_dir(&d).expect("readable") {
            let p = e.expect("entry").path();
            if p.is_dir() {
                stack.push(p);
            } else {
                let rel = p.strip_prefix(dir).unwrap().to_string_lossy().to_string();
                if rel != "manifest.json" {
                    out.insert(rel, std::fs::read(&p).expect("readable"));
                }
            }
        }
    }
    out
}

fn read_json(path: &Path) -> Value {
    serde_json::from_slice(&std::fs::read(path).expect("artifact exists")).expect("valid json")
}

fn main() -> ExitCode {
    let tmp = tempfile::tempdir().expect("temp dir");
    let (a, b) = (tmp.path().join("first"), tmp.path().join("second"));
    let code = run_suite(&a);
    let suite = read_json(&a.join("suite.json"));
    let manifest = read_json(&a.join("manifest.json"));
    let group_seconds = manifest["phases"]
        .as_array()
        .and_then(|p| p.iter().find(|x| x[0] == "groups"))
        .and_then(|x| x[1].as_f64())
        .unwrap_or(f64::INFINITY);

    let mut lines = Vec::new();
    for c in suite["criteria"].as_array().expect("criteria") {
        let id = c["id"].as_u64().unwrap();
        let mut pass = c["pass"].as_bool().unwrap();
        let mut detail = format!("{} checks, {} failures", c["checks"], c["failures"]);
        if let Some(f) = c["first_failure"].as_str() {
            detail.push_str(&format!("; first: {f}"));
        }
        if id == 1 {
            pass &= group_seconds <= TABLE_SECONDS;
            detail.push_str(&format!("; catalog pass {group_seconds:.1}s of {TABLE_SECONDS}s"));
        }
        lines.push((id, pass, c["title"].as_str().unwrap().to_string(), detail));
    }

    let second = run_suite(&b);
    let (x, y) = (artifacts(&a), artifacts(&b));
    let differing: Vec<&String> = x.keys().chain(y.keys()).filter(|k| x.get(*k) != y.get(*k)).collect();
    lines.push((
        14,
        differing.is_empty() && code == second && !x.is_empty(),
        "determinism of suite artifacts".to_string(),
        format!("{} files compared, {} differ", x.len(), differing.len()),
    ));

    let mut all = code == 0;
    for (id, pass, title, detail) in &lines {
        all &= *pass;
        println!("criterion {id:>2}: {} {title} ({detail})", if *pass { "PASS" } else { "FAIL" });
    }
    all &= lines.len() == 14;
    if all {
        ExitCode::SUCCESS
    } else {
        println!("suite exit code {code}");
        ExitCode::FAILURE
    }
}
