use std::sync::Arc;

use artin_core::chartab::{character_table, kernel, linear_characters, ClassFunction};
use artin_core::group::families::group_from_spec;
use artin_core::group::{Group, Perm, Subgroup};
use artin_core::{Cyclotomic, Limits};
use num_bigint::BigInt;
use num_rational::BigRational;

fn group(spec: &str) -> Arc<Group> {
    group_from_spec(spec, Limits::default()).unwrap()
}

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_integer(n)
}

fn z(e: u32, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(e, k)
}

fn sub(g: &Arc<Group>, gens: &[&str]) -> Subgroup {
    let perms: Vec<Perm> = gens.iter().map(|s| Perm::parse(s, Some(g.degree())).unwrap()).collect();
    Subgroup::from_perms(g, &perms).unwrap()
}

/// Frobenius formula by direct enumeration over `G`.
fn induce_by_enumeration(h: &Subgroup, psi: &ClassFunction) -> Vec<Cyclotomic> {
    let g = h.parent();
    let emb = h.embedding().unwrap();
    g.classes()
        .iter()
        .map(|c| {
            let y = g.element(c.representative);
            let mut acc = Cyclotomic::zero();
            for x in g.elements() {
                let conj = x.mul(y).mul(&x.inverse());
                if let Some(i) = emb.group.index_of(&conj) {
                    acc = &acc + psi.at(i);
                }
            }
            acc.scale(&BigRational::new(BigInt::from(1), BigInt::from(h.order())))
        })
        .collect()
}

#[test]
fn cyclic_three_table() {
    let g = group("Cyc(3)");
    let t = character_table(&g).unwrap();
    let rows: Vec<Vec<Cyclotomic>> = t.irreducibles().iter().map(|c| c.values().to_vec()).collect();
    assert_eq!(
        rows,
        vec![
            vec![int(1), int(1), int(1)],
            vec![int(1), z(3, 1), z(3, 2)],
            vec![int(1), z(3, 2), z(3, 1)],
        ]
    );
}

#[test]
fn documented_degrees() {
    assert_eq!(character_table(&group("Sym(3)")).unwrap().degrees(), &[1, 1, 2]);
    assert_eq!(character_table(&group("Q8")).unwrap().degrees(), &[1, 1, 1, 1, 2]);
    assert_eq!(character_table(&group("Alt(5)")).unwrap().degrees(), &[1, 3, 3, 4, 5]);
    assert_eq!(character_table(&group("Cyc(1)")).unwrap().degrees(), &[1]);
}

#[test]
fn orthogonality_on_sampled_groups() {
    for spec in artin_core::catalog::sampler() {
        let g = group(&spec);
        let t = character_table(&g).unwrap();
        assert_eq!(t.len(), g.num_classes(), "{spec}");
        for (i, a) in t.irreducibles().iter().enumerate() {
            for (j, b) in t.irreducibles().iter().enumerate() {
                assert_eq!(a.inner_product(b).unwrap(), int((i == j) as i64), "{spec} rows {i},{j}");
            }
        }
        // Columns: Σ_χ χ(x) conj χ(y) = |C_G(x)| δ.
        for x in 0..g.num_classes() {
            for y in 0..g.num_classes() {
                let s: Cyclotomic = t.irreducibles().iter().map(|c| c.value(x) * &c.value(y).conj()).sum();
                let expected = if x == y { (g.order() / g.classes()[x].size) as i64 } else { 0 };
                assert_eq!(s, int(expected), "{spec} columns {x},{y}");
            }
        }
    }
}

#[test]
fn class_sizes_match_brute_force_orbits() {
    for spec in ["Sym(3)", "Sym(4)", "Q8"] {
        let g = group(spec);
        for c in g.classes() {
            let x = g.element(c.representative);
            let mut orbit: Vec<Perm> = g.elements().iter().map(|y| x.conjugate_by(y)).collect();
            orbit.sort();
            orbit.dedup();
            assert_eq!(orbit.len(), c.size);
        }
    }
    let sizes: Vec<usize> = group("Sym(4)").classes().iter().map(|c| c.size).collect();
    let mut sorted = sizes.clone();
    sorted.sort();
    assert_eq!(sorted, vec![1, 3, 6, 6, 8]);
}

#[test]
fn inner_product_examples() {
    let g = group("Sym(3)");
    let t = character_table(&g).unwrap();
    let triv = ClassFunction::trivial(&g);
    assert_eq!(triv.inner_product(&triv).unwrap(), int(1));
    let reg = ClassFunction::regular(&g);
    for (chi, &d) in t.irreducibles().iter().zip(t.degrees()) {
        assert_eq!(reg.inner_product(chi).unwrap(), int(d as i64));
    }
    assert!(triv.inner_product(&ClassFunction::trivial(&group("Cyc(2)"))).is_err());
}

#[test]
fn induction_matches_enumeration_and_examples() {
    let g = group("Sym(3)");
    let t = character_table(&g).unwrap();
    let a3 = sub(&g, &["(1 2 3)"]);
    let psis = linear_characters(&a3.embedding().unwrap().group);
    let induced = ClassFunction::induce(&a3, &psis[1]).unwrap();
    assert_eq!(induced, *t.get(2));
    assert_eq!(induced.values(), induce_by_enumeration(&a3, &psis[1]).as_slice());

    let whole = Subgroup::whole(&g);
    let chi = t.get(2).restrict(&whole).unwrap();
    assert_eq!(ClassFunction::induce(&whole, &chi).unwrap().values(), t.get(2).values());

    let one = Subgroup::trivial(&g);
    let triv = ClassFunction::trivial(&one.embedding().unwrap().group);
    assert_eq!(ClassFunction::induce(&one, &triv).unwrap(), ClassFunction::regular(&g));

    for spec in ["Q8", "Dih(4)", "SL23", "Alt(5)"] {
        let g = group(spec);
        for h in artin_core::group::subgroups_up_to_conjugacy(&g, artin_core::SubgroupFilter::Cyclic).unwrap() {
            for psi in linear_characters(&h.embedding().unwrap().group) {
                let ind = ClassFunction::induce(&h, &psi).unwrap();
                assert_eq!(ind.values(), induce_by_enumeration(&h, &psi).as_slice(), "{spec}");
                assert_eq!(ind.degree(), &int((g.order() / h.order()) as i64));
            }
        }
    }
}

#[test]
fn frobenius_reciprocity() {
    for spec in ["Sym(4)", "Q8", "F21"] {
        let g = group(spec);
        let t = character_table(&g).unwrap();
        for h in artin_core::group::subgroups_up_to_conjugacy(&g, artin_core::SubgroupFilter::All).unwrap() {
            for psi in linear_characters(&h.embedding().unwrap().group) {
                let ind = ClassFunction::induce(&h, &psi).unwrap();
                for chi in t.irreducibles() {
                    let lhs = ind.inner_product(chi).unwrap();
                    let rhs = psi.inner_product(&chi.restrict(&h).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "{spec}");
                }
            }
        }
    }
}

#[test]
fn calculus_examples() {
    let g = group("Sym(3)");
    let t = character_table(&g).unwrap();
    let (triv, sgn, chi2) = (t.get(0), t.get(1), t.get(2));
    assert_eq!(sgn.product(sgn).unwrap(), *triv);

    let a3 = sub(&g, &["(1 2 3)"]);
    let res = chi2.restrict(&a3).unwrap();
    let h = res.group().clone();
    let psis = linear_characters(&h);
    assert_eq!(res, psis[1].add(&psis[2]).unwrap());
    let r: Vec<Cyclotomic> = res.values().to_vec();
    assert_eq!(r, vec![int(2), int(-1), int(-1)]);

    let sq = chi2.product(chi2).unwrap();
    let transposition = g.class_of(g.index_of(&Perm::parse("(1 2)", Some(3)).unwrap()).unwrap());
    let three_cycle = g.class_of(g.index_of(&Perm::parse("(1 2 3)", Some(3)).unwrap()).unwrap());
    assert_eq!(sq.degree(), &int(4));
    assert_eq!(sq.value(transposition), &int(0));
    assert_eq!(sq.value(three_cycle), &int(1));
    let mult: Vec<(usize, Cyclotomic)> = t.decompose(&sq).unwrap();
    assert_eq!(mult, vec![(0, int(1)), (1, int(1)), (2, int(1))]);

    assert_eq!(chi2.scale(&BigRational::new(3.into(), 2.into())).degree(), &int(3));
    assert_eq!(chi2.conjugate(), *chi2);
}

#[test]
fn kernels_and_faithfulness() {
    let g = group("Sym(3)");
    let t = character_table(&g).unwrap();
    let (k, faithful) = t.kernel_and_faithful(t.get(1)).unwrap();
    assert_eq!(k.order(), 3);
    assert!(!faithful);
    let (k, faithful) = t.kernel_and_faithful(t.get(2)).unwrap();
    assert!(k.is_trivial() && faithful);
    let (k, faithful) = t.kernel_and_faithful(t.get(0)).unwrap();
    assert!(k.is_whole() && !faithful);
    let half = t.get(2).scale(&BigRational::new(1.into(), 2.into()));
    assert!(t.kernel_and_faithful(&half).is_err());
    assert_eq!(kernel(t.get(1)).order(), 3);
}

#[test]
fn linear_character_examples() {
    let c4 = linear_characters(&group("Cyc(4)"));
    assert_eq!(c4.len(), 4);
    for chi in &c4 {
        for v in chi.values() {
            let v4 = &(&(v * v) * v) * v;
            assert_eq!(v4, int(1));
        }
    }
    assert_eq!(linear_characters(&group("Q8")).len(), 4);
    let s4 = linear_characters(&group("Sym(4)"));
    assert_eq!(s4.len(), 2);
    assert_eq!(s4[0], ClassFunction::trivial(s4[0].group()));
}

#[test]
fn decomposition_examples() {
    let g = group("Sym(3)");
    let t = character_table(&g).unwrap();
    let reg = ClassFunction::regular(&g);
    let m: Vec<Cyclotomic> = t.decompose(&reg).unwrap().into_iter().map(|(_, m)| m).collect();
    assert_eq!(m, vec![int(1), int(1), int(2)]);

    let c2 = sub(&g, &["(1 2)"]);
    let triv = ClassFunction::trivial(&c2.embedding().unwrap().group);
    let ind = ClassFunction::induce(&c2, &triv).unwrap();
    assert_eq!(t.decompose(&ind).unwrap(), vec![(0, int(1)), (2, int(1))]);
    assert!(t.decompose(&ClassFunction::zero(&g)).unwrap().is_empty());
}
