use std::sync::Arc;

use artin_core::group::families::group_from_spec;
use artin_core::group::structure::{minimal_normals, normal_subgroups};
use artin_core::group::{Group, Perm, Subgroup};
use artin_core::induction::{
    certificate_solve, class_indicator_decomposition, bounded_certificate, mackey_decompose, verify_spaces,
    within_coefficient_bound, z_certificate_search, IntegralVerdict, MonomialCharacter, Workspace,
};
use artin_core::{ClassFunction, Cyclotomic, Error, Limits, SubgroupFilter};
use num_bigint::BigInt;
use num_rational::BigRational;

fn group(spec: &str) -> Arc<Group> {
    group_from_spec(spec, Limits::default()).unwrap()
}

fn sub(g: &Arc<Group>, gens: &[&str]) -> Subgroup {
    let perms: Vec<Perm> = gens.iter().map(|s| Perm::parse(s, Some(g.degree())).unwrap()).collect();
    Subgroup::from_perms(g, &perms).unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn class_by_perm(g: &Arc<Group>, s: &str) -> usize {
    g.class_of(g.index_of(&Perm::parse(s, Some(g.degree())).unwrap()).unwrap())
}

#[test]
fn faithful_monomials_examples() {
    let ws = Workspace::new(&group("Q8")).unwrap();
    let two_dim = ws.table().get(4).clone();
    let fm = ws.faithful_monomials().unwrap();
    assert!(fm.iter().any(|m| m.subgroup.order() == 4 && m.induced == two_dim));
    // Ind_Z ψ = 2χ also qualifies.
    assert!(fm.iter().all(|m| m.multiplicities == vec![0, 0, 0, 0, m.multiplicities[4]]));
    assert_eq!(fm.len(), 2);

    let ws = Workspace::new(&group("Sym(3)")).unwrap();
    let fm = ws.faithful_monomials().unwrap();
    assert!(fm.iter().any(|m| m.subgroup.order() == 3 && m.induced == *ws.table().get(2)));
    assert!(fm.iter().all(|m| m.label.iter().any(|&a| a != 0)));

    let ws = Workspace::new(&group("Cyc(2)")).unwrap();
    let fm = ws.faithful_monomials().unwrap();
    assert_eq!(fm.len(), 1);
    assert!(fm[0].subgroup.is_whole());
    assert_eq!(fm[0].induced, *ws.table().get(1));
}

#[test]
fn certificate_examples() {
    let g = group("Sym(3)");
    let ws = Workspace::new(&g).unwrap();
    let a3 = sub(&g, &["(1 2 3)"]);
    let cert = certificate_solve(&ws, ws.table().get(2), SubgroupFilter::Nilpotent, std::slice::from_ref(&a3)).unwrap();
    assert_eq!(cert.terms.len(), 1);
    assert_eq!(cert.terms[0].monomial.subgroup.order(), 3);
    assert_eq!(cert.terms[0].coefficient, q(1, 1));
    assert!(cert.verify());

    let g = group("Q8");
    let ws = Workspace::new(&g).unwrap();
    let z = minimal_normals(&g);
    assert_eq!(z.len(), 1);
    let cert = certificate_solve(&ws, ws.table().get(4), SubgroupFilter::Nilpotent, &z).unwrap();
    assert_eq!(cert.terms.len(), 1);
    assert_eq!(cert.terms[0].monomial.subgroup.order(), 4);
    assert_eq!(cert.terms[0].coefficient, q(1, 1));

    let g = group("Alt(5)");
    let ws = Workspace::new(&g).unwrap();
    let four = ws.table().degrees().iter().position(|&d| d == 4).unwrap();
    let cert = certificate_solve(&ws, ws.table().get(four), SubgroupFilter::Nilpotent, &[Subgroup::whole(&g)]).unwrap();
    assert!(cert.verify());
    let sum = cert.terms.iter().fold(ClassFunction::zero(&g), |acc, t| {
        acc.add(&t.monomial.induced.scale(&t.coefficient)).unwrap()
    });
    assert_eq!(sum, *ws.table().get(four));
}

#[test]
fn certificate_errors() {
    let g = group("Sym(3)");
    let ws = Workspace::new(&g).unwrap();
    let a3 = sub(&g, &["(1 2 3)"]);
    // The sign character is trivial on A₃, so it lies outside R(G; A₃).
    match certificate_solve(&ws, ws.table().get(1), SubgroupFilter::Nilpotent, &[a3]) {
        Err(Error::Precondition(_)) => {}
        other => panic!("expected a precondition error, got {other:?}"),
    }
    let half = ws.table().get(2).scale(&q(1, 2));
    let cert = certificate_solve(&ws, &half, SubgroupFilter::Cyclic, &[]).unwrap();
    assert!(cert.verify());
}

#[test]
fn tampered_certificate_fails_verification() {
    let g = group("Sym(3)");
    let ws = Workspace::new(&g).unwrap();
    let mut cert = certificate_solve(&ws, ws.table().get(2), SubgroupFilter::Cyclic, &[]).unwrap();
    assert!(cert.verify());
    cert.terms[0].coefficient += q(1, 7);
    assert!(!cert.verify());
}

#[test]
fn space_examples() {
    let g = group("Sym(3)");
    let ws = Workspace::new(&g).unwrap();
    let a3 = sub(&g, &["(1 2 3)"]);
    let r = verify_spaces(&ws, &[a3], SubgroupFilter::Nilpotent).unwrap();
    assert_eq!((r.r_dim, r.i_rank), (1, 1));
    assert!(r.equal && r.i_within_r && r.pushforward_vanishes);
    assert_eq!(r.dual_check, Some(true));

    let g = group("Cyc(2) x Cyc(2)");
    let ws = Workspace::new(&g).unwrap();
    let first = sub(&g, &["(1 2)"]);
    let r = verify_spaces(&ws, &[first], SubgroupFilter::Nilpotent).unwrap();
    assert_eq!(r.r_dim, 2);
    assert!(r.equal);

    for spec in ["Sym(4)", "Q8", "F21", "Dih(6)"] {
        let ws = Workspace::new(&group(spec)).unwrap();
        let r = verify_spaces(&ws, &[], SubgroupFilter::Cyclic).unwrap();
        assert_eq!(r.i_rank, ws.group().num_classes(), "{spec}");
        assert!(r.equal);
    }
}

#[test]
fn all_family_dominates_nilpotent() {
    for spec in ["Sym(4)", "SL23", "Dih(5)"] {
        let g = group(spec);
        let ws = Workspace::new(&g).unwrap();
        for n in normal_subgroups(&g).into_iter().filter(|n| !n.is_trivial()) {
            let all = verify_spaces(&ws, std::slice::from_ref(&n), SubgroupFilter::All).unwrap();
            let nil = verify_spaces(&ws, std::slice::from_ref(&n), SubgroupFilter::Nilpotent).unwrap();
            assert!(all.i_rank >= nil.i_rank, "{spec}");
            assert!(all.equal && nil.equal, "{spec} |N| = {}", n.order());
            assert_eq!(nil.dual_check, Some(true), "{spec}");
        }
    }
}

#[test]
fn integral_examples() {
    for (spec, index) in [("Q8", 4), ("Sym(3)", 2)] {
        let ws = Workspace::new(&group(spec)).unwrap();
        match z_certificate_search(&ws, ws.table().get(index)).unwrap() {
            IntegralVerdict::Integral(c) => {
                assert_eq!(c.terms.len(), 1, "{spec}");
                assert_eq!(c.terms[0].coefficient, q(1, 1));
            }
            other => panic!("{spec}: {}", other.name()),
        }
    }
    let ws = Workspace::new(&group("Cyc(6)")).unwrap();
    for i in ws.table().faithful_indices() {
        assert!(matches!(
            z_certificate_search(&ws, ws.table().get(i)).unwrap(),
            IntegralVerdict::Integral(_)
        ));
    }
    assert!(z_certificate_search(&ws, ws.table().get(0)).is_err());
}

#[test]
fn bounded_examples() {
    for (spec, m) in [("Sym(3)", 1), ("Q8", 1), ("Alt(5)", 4)] {
        let ws = Workspace::new(&group(spec)).unwrap();
        let (certs, report) = bounded_certificate(&ws).unwrap();
        assert_eq!(report.m, m, "{spec}");
        assert_eq!(certs.len(), m);
        assert!(report.holds(), "{spec}: {report:?}");
        assert!(certs.iter().all(|c| c.verify()));
        if m == 1 {
            assert_eq!(certs[0].terms[0].coefficient, q(1, 1));
        }
    }
    assert!(Workspace::new(&group("Sym(4)"))
        .map(|ws| bounded_certificate(&ws).is_ok())
        .unwrap());
    assert!(bounded_certificate(&Workspace::new(&group("Sym(1)")).unwrap()).is_err());
}

#[test]
fn coefficient_bound_is_exact() {
    // 6^{7.5} ≈ 685 700.36
    assert!(within_coefficient_bound(&q(685_700, 1), 6));
    assert!(!within_coefficient_bound(&q(685_701, 1), 6));
    assert!(within_coefficient_bound(&q(-685_700, 1), 6));
    assert!(within_coefficient_bound(&q(1, 3), 2));
}

fn monomial(ws: &Workspace, h: &Subgroup, label_index: usize) -> MonomialCharacter {
    let own = h.embedding().unwrap().group.clone();
    let lin = artin_core::chartab::linear_characters_labelled(&own).swap_remove(label_index);
    MonomialCharacter::new(h, lin.label, lin.character, ws.table()).unwrap()
}

#[test]
fn mackey_examples() {
    let g = group("Sym(3)");
    let ws = Workspace::new(&g).unwrap();
    let a3 = sub(&g, &["(1 2 3)"]);
    let phi = monomial(&ws, &a3, 1);
    let dec = mackey_decompose(&phi, &phi).unwrap();
    assert_eq!(dec.double_cosets, 2);
    assert_eq!(dec.terms.len(), 2);
    assert!(dec.terms.iter().all(|t| t.subgroup.order() == 3 && t.multiplicity == 1));
    assert!(dec.terms.iter().any(|t| t.label.iter().all(|&a| a == 0)));
    let report = dec.check(&phi, &phi).unwrap();
    assert!(report.pointwise);
    assert_eq!(report.degree_sum, report.expected_degree);

    let whole = monomial(&ws, &Subgroup::whole(&g), 0);
    let dec = mackey_decompose(&phi, &whole).unwrap();
    assert_eq!(dec.sum().unwrap(), phi.induced);

    let g = group("Q8");
    let ws = Workspace::new(&g).unwrap();
    let fm = ws.faithful_monomials().unwrap();
    let c4s: Vec<&MonomialCharacter> = fm.iter().filter(|m| m.degree() == 2).collect();
    let dec = mackey_decompose(c4s[0], c4s[c4s.len() - 1]).unwrap();
    let report = dec.check(c4s[0], c4s[c4s.len() - 1]).unwrap();
    assert!(report.pointwise);
    assert_eq!(report.degree_sum, 4);
}

#[test]
fn mackey_against_direct_products_on_many_pairs() {
    for spec in ["Sym(4)", "SL23", "F21"] {
        let ws = Workspace::new(&group(spec)).unwrap();
        let all = ws.monomials(SubgroupFilter::All).unwrap();
        let step = (all.len() / 8).max(1);
        for a in all.iter().step_by(step) {
            for b in all.iter().step_by(step + 1) {
                let report = mackey_decompose(a, b).unwrap().check(a, b).unwrap();
                assert!(report.pointwise, "{spec}");
                assert_eq!(report.degree_sum, report.expected_degree, "{spec}");
            }
        }
    }
}

#[test]
fn indicator_examples() {
    let g = group("Sym(3)");
    let ws = Workspace::new(&g).unwrap();
    let int = |n: i64, d: i64| Cyclotomic::from_rational(q(n, d));

    let dec = class_indicator_decomposition(&ws, class_by_perm(&g, "(1 2)")).unwrap();
    assert_eq!(dec.coefficients, vec![int(1, 2), int(-1, 2), int(0, 1)]);
    assert!(dec.reproduces && dec.within_one());

    let dec = class_indicator_decomposition(&ws, class_by_perm(&g, "(1 2 3)")).unwrap();
    assert_eq!(dec.coefficients, vec![int(1, 3), int(1, 3), int(-1, 3)]);
    assert!(dec.reproduces && dec.within_one());

    for spec in ["Alt(5)", "Q8", "Cyc(7)"] {
        let ws = Workspace::new(&group(spec)).unwrap();
        let n = ws.group().order() as i64;
        let dec = class_indicator_decomposition(&ws, 0).unwrap();
        let expected: Vec<Cyclotomic> = ws.table().degrees().iter().map(|&d| int(d as i64, n)).collect();
        assert_eq!(dec.coefficients, expected);
        assert!(dec.reproduces && dec.within_one(), "{spec}");
    }
    assert!(class_indicator_decomposition(&ws, 99).is_err());
}

#[test]
fn kernel_filter_matches_faithful_constituents() {
    for spec in ["Sym(4)", "Q8", "Dih(6)", "SL23", "Cyc(3) x Sym(3)"] {
        let ws = Workspace::new(&group(spec)).unwrap();
        let (checked, bad) = ws.kernel_filter_agreement().unwrap();
        assert!(checked > 0);
        assert_eq!(bad, 0, "{spec}");
    }
}

#[test]
fn certificate_export_round_trips_through_json() {
    let g = group("Sym(3)");
    let ws = Workspace::new(&g).unwrap();
    let cert = certificate_solve(&ws, ws.table().get(2), SubgroupFilter::Nilpotent, ws.minimal_normals()).unwrap();
    let json = serde_json::to_value(cert.export("Sym(3)")).unwrap();
    assert_eq!(json["schema"], "artin-induction-certificate/1");
    assert_eq!(json["verified"], true);
    assert_eq!(json["group"]["order"], 6);
    assert_eq!(json["terms"][0]["coefficient"], "1");
}
