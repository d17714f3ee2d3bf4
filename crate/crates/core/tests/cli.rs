use std::process::{Command, Output};

fn qschubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschubert")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn basis_lists_every_class() {
    let o = qschubert(&["basis", "G2/P2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 6);
    assert!(out.lines().last().unwrap().ends_with("σ(6,4)"), "{out}");
}

#[test]
fn info_reports_dimension_and_index() {
    let o = qschubert(&["info", "E6/P1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("dimension    16"));
    assert!(out.contains("fano index   12"));
    assert!(out.contains("profile      1 1 1 1 2"));
}

#[test]
fn mult_quantum_product() {
    // h ⋆ σ(3,1) in G2/P2: h³ = 6σ(3,3) + 3q and h² = 3σ(3,1)
    let o = qschubert(&["mult", "G2/P2", "(0,1)", "(3,1)"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("2 σ(3,3)") && out.contains("q"), "{out}");
}

#[test]
fn giambelli_formats() {
    let plain = stdout(&qschubert(&["giambelli", "G2/P2"]));
    assert!(plain.contains("σ(3,3) = 1/6 h^3 - 1/2 q"), "{plain}");
    let tex = stdout(&qschubert(&["giambelli", "G2/P2", "--latex"]));
    assert!(tex.contains("Schubert cells in degree $3$"));
    let structured = stdout(&qschubert(&["giambelli", "G2/P2", "--struct"]));
    assert!(structured.starts_with("space G2/P2"));
    assert!(quantum_schubert::refdata::corpus::parse(&structured).is_ok());
}

#[test]
fn verify_exit_codes() {
    let ok = qschubert(&["verify", "G2/P2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("PASS (6 rows)"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2p2.qh");
    let text = quantum_schubert::refdata::Corpus::shipped_text("G2/P2".parse().unwrap());
    let corrupted = text.replacen("1/6", "1/5", 1);
    assert_ne!(corrupted, text);
    std::fs::write(&path, corrupted).unwrap();
    let bad = qschubert(&["verify", "G2/P2", "--reference", path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    let out = stdout(&bad);
    assert!(out.contains("row (3,3)") && out.contains("FAIL"), "{out}");

    std::fs::write(&path, "").unwrap();
    let empty = qschubert(&["verify", "all", "--reference", path.to_str().unwrap()]);
    assert_eq!(empty.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qschubert(&["basis", "E6/P4"]).status.code(), Some(2));
    assert_eq!(qschubert(&["mult", "G2/P2", "(9,9)", "(0,1)"]).status.code(), Some(2));
    assert_eq!(qschubert(&["frobnicate"]).status.code(), Some(2));
}
