use std::process::{Command, Output};

fn artin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin")).args(args).output().expect("artin runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).to_string()
}

#[test]
fn table_of_cyclic_group_is_three_by_three() {
    let o = artin(&["table", "Cyc(3)"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("chi_")).count(), 3);
    let o = artin(&["table", "Cyc(3)", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["characters"].as_array().unwrap().len(), 3);
    assert_eq!(v["classes"].as_array().unwrap().len(), 3);
}

#[test]
fn c_epsilon_at_two() {
    let o = artin(&["bounds", "--which", "c_eps", "--eps", "1", "--degK", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert_eq!(v, 1.0 / (29.0 * 2f64.sqrt()));
}

#[test]
fn gate_violation_names_the_gate() {
    let o = artin(&["bounds", "--which", "bilinear", "--Q", "100", "--H", "1e6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("H ≥ Q^d e^{16nd⁴}"));
    let o = artin(&["bounds", "--which", "bilinear", "--Q", "10", "--log-h", "40", "--e-sum", "2", "--a-l1", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("bilinear = "));
}

#[test]
fn usage_and_input_errors_exit_one() {
    assert_eq!(artin(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(artin(&["table", "Foo(3)"]).status.code(), Some(1));
    assert_eq!(artin(&["bounds", "--which", "nope"]).status.code(), Some(1));
    assert_eq!(artin(&["certify", "Sym(3)", "--char", "9"]).status.code(), Some(1));
    assert_eq!(artin(&["--help"]).status.code(), Some(0));
}

#[test]
fn faithful_certificates_for_sym3() {
    for name in ["verify-faithful", "verify-thm13"] {
        let o = artin(&[name, "Sym(3)"]);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["faithful"], serde_json::json!([3]));
        let certs = v["certificates"].as_array().unwrap();
        assert_eq!(certs.len(), 1);
        assert_eq!(certs[0]["verified"], true);
        assert_eq!(certs[0]["target"], serde_json::json!(["cyclo(1; 2)", "cyclo(1; -1)", "cyclo(1; 0)"]));
    }
}

#[test]
fn certify_writes_certificate_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let o = artin(&["certify", "Q8", "--char", "5", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let cert: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("certificate.json")).unwrap()).unwrap();
    assert_eq!(cert["verified"], true);
    let m: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("manifest.json")).unwrap()).unwrap();
    assert_eq!(m["verdict"], "pass");
    assert_eq!(m["artifacts"][0]["path"], "certificate.json");
    assert_eq!(m["artifacts"][0]["sha256"].as_str().unwrap().len(), 64);
    let again = tempfile::tempdir().unwrap();
    artin(&["certify", "Q8", "--char", "5", "--out", again.path().to_str().unwrap()]);
    assert_eq!(
        std::fs::read(dir.path().join("certificate.json")).unwrap(),
        std::fs::read(again.path().join("certificate.json")).unwrap()
    );
}

#[test]
fn normal_subgroup_hypotheses() {
    let o = artin(&["verify-tgn", "Dih(4)"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let normals = v.as_array().unwrap();
    assert!(!normals.is_empty());
    assert!(normals.iter().all(|n| n["spaces"].as_array().unwrap().iter().all(|s| s["equal"] == true)));
}

#[test]
fn mackey_pairs_are_seeded() {
    let a = artin(&["mackey", "Sym(4)", "--pairs", "5", "--seed", "7"]);
    let b = artin(&["mackey", "Sym(4)", "--pairs", "5", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
}

#[test]
fn scan_flags_only_the_synthetic_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let o = artin(&[
        "scan-bad", "--mod", "4", "--eps", "0.5", "--disc", "4", "--grid", "gate:100000:997", "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not flagged"));
    let csv = std::fs::read_to_string(dir.path().join("scan.csv")).unwrap();
    assert!(csv.starts_with("H,lhs,rhs,ratio,verdict\n"));
    assert!(csv.lines().skip(1).all(|l| l.ends_with(",ok")));

    let o = artin(&["scan-bad", "--mod", "4", "--disc", "4", "--grid", "7:1000:7", "--synthetic"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("flagged at H = 7"));

    let o = artin(&["scan-bad", "--mod", "4", "--disc", "1e40", "--grid", "10:100:10"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bilinear_small_family() {
    let o = artin(&["bilinear", "--mods", "3,4,5", "--H", "10000"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("5 characters"));
    assert!(text.contains("(holds)"));
    assert!(text.contains("outside gate"));
    assert_eq!(artin(&["bilinear", "--mods", "6", "--H", "100"]).status.code(), Some(1));
}
