use artin_core::suite::{check_group, gate_cases, reference_transcriptions, summarize, Check, SUITE_SEED};
use artin_core::Limits;

#[test]
fn group_checks_cover_every_group_criterion() {
    let o = check_group(0, "Sym(4)", SUITE_SEED, Limits::default());
    let r = &o.report;
    assert_eq!((r.order, r.classes, r.faithful_irreducibles), (24, 5, 2));
    assert!(!r.nilpotent);
    assert!(r.checks.iter().all(|c| c.pass), "{:?}", r.checks.iter().find(|c| !c.pass));
    for k in 1..=8u8 {
        assert!(r.checks.iter().any(|c| c.criterion == k), "criterion {k}");
    }
    assert_eq!(o.certificates.len(), 2);
    assert!(o.certificates.iter().all(|c| c.verified));
}

#[test]
fn group_checks_are_reproducible() {
    let a = check_group(3, "Q8 x Cyc(3)", SUITE_SEED, Limits::default());
    let b = check_group(3, "Q8 x Cyc(3)", SUITE_SEED, Limits::default());
    let json = |o: &artin_core::suite::GroupOutcome| serde_json::to_string(&o.report).unwrap();
    assert_eq!(json(&a), json(&b));
    assert!(a.report.nilpotent);
    assert!(a.report.checks.iter().any(|c| c.subject.contains("elementary_rank_le_2")));
}

#[test]
fn bad_spec_fails_the_table_criterion() {
    let o = check_group(0, "Nope(2)", SUITE_SEED, Limits::default());
    assert_eq!(o.report.checks.len(), 1);
    assert!(!o.report.checks[0].pass);
}

#[test]
fn summary_requires_checks_and_no_failures() {
    let checks = vec![
        Check::new(1, "a", true, ""),
        Check::new(2, "b", true, ""),
        Check::new(2, "c", false, "broken"),
    ];
    let s = summarize(&checks);
    assert_eq!(s.len(), 13);
    assert!(s[0].pass);
    assert!(!s[1].pass);
    assert_eq!(s[1].first_failure.as_deref(), Some("c: broken"));
    assert!(!s[2].pass && s[2].checks == 0);
}

#[test]
fn fixed_case_tables_are_well_formed() {
    assert_eq!(reference_transcriptions().len(), 11);
    let cases = gate_cases();
    assert!(cases.iter().any(|c| c.2) && cases.iter().any(|c| !c.2));
}
