//! Characteristic and normal subgroups computed from the element list.

use std::collections::HashSet;
use std::sync::Arc;

use super::bitset::BitSet;
use super::finite::Group;
use super::subgroup::Subgroup;
use crate::error::{input, Result};

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The `p`-part of `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}

pub fn is_prime_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

pub fn center(g: &Arc<Group>) -> Subgroup {
    let gens = g.generator_indices();
    let members: Vec<usize> = (0..g.order())
        .filter(|&x| gens.iter().all(|&s| g.mul(x, s) == g.mul(s, x)))
        .collect();
    Subgroup::from_closed_set(g, BitSet::from_indices(g.order(), members))
}

pub fn centralizer(g: &Arc<Group>, x: usize) -> Subgroup {
    let members: Vec<usize> = (0..g.order()).filter(|&y| g.mul(x, y) == g.mul(y, x)).collect();
    Subgroup::from_closed_set(g, BitSet::from_indices(g.order(), members))
}

pub fn normalizer(g: &Arc<Group>, h: &Subgroup) -> Subgroup {
    let members: Vec<usize> = (0..g.order()).filter(|&y| h.is_normalized_by(y)).collect();
    Subgroup::from_closed_set(g, BitSet::from_indices(g.order(), members))
}

/// Largest normal subgroup of `g` inside `h`.
pub fn core(g: &Arc<Group>, h: &Subgroup) -> Subgroup {
    let mut set = h.set().clone();
    for c in h.conjugates() {
        set = set.intersection(c.set());
    }
    Subgroup::from_closed_set(g, set)
}

/// Closure of `seeds` under multiplication and conjugation by `ambient`.
fn closure_under_conjugation(g: &Arc<Group>, ambient: &[usize], seeds: &[usize]) -> Subgroup {
    let mut gens: Vec<usize> = seeds.iter().copied().filter(|&x| x != 0).collect();
    let mut members = g.closure(&gens);
    let mut set = BitSet::from_indices(g.order(), members.iter().copied());
    loop {
        let mut grew = false;
        let snapshot = gens.clone();
        for &x in &snapshot {
            for &a in ambient {
                let y = g.conjugate(x, a);
                if !set.contains(y) {
                    gens.push(y);
                    members = g.extend_closure(&members, &gens);
                    set = BitSet::from_indices(g.order(), members.iter().copied());
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    Subgroup::with_members(g, members, gens)
}

pub fn normal_closure(g: &Arc<Group>, seeds: &[usize]) -> Subgroup {
    closure_under_conjugation(g, g.generator_indices(), seeds)
}

/// `[A, B]`: the normal closure in `⟨A, B⟩` of the commutators `[a, b]`
/// with `a ∈ A` and `b` a generator of `B`.
pub fn commutator_subgroup(a: &Subgroup, b: &Subgroup) -> Subgroup {
    let g = a.parent();
    let ambient: Vec<usize> = a.generators().iter().chain(b.generators()).copied().collect();
    let mut seeds = Vec::new();
    let mut seen = HashSet::new();
    for &x in a.members() {
        for &y in b.generators() {
            let c = g.commutator(x, y);
            if c != 0 && seen.insert(c) {
                seeds.push(c);
            }
        }
    }
    closure_under_conjugation(g, &ambient, &seeds)
}

/// `[H, H]` as a subgroup of the parent of `h`.
pub fn derived_of(h: &Subgroup) -> Subgroup {
    let g = h.parent();
    let gens = h.generators();
    let mut seeds = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            seeds.push(g.commutator(a, b));
        }
    }
    closure_under_conjugation(g, gens, &seeds)
}

pub fn derived_subgroup(g: &Arc<Group>) -> Subgroup {
    derived_of(&Subgroup::whole(g))
}

/// A Sylow `p`-subgroup, grown one factor of `p` at a time inside normalisers.
pub fn sylow(g: &Arc<Group>, p: u64) -> Result<Subgroup> {
    let n = g.order() as u64;
    if p < 2 || !prime_factors(p).eq(&[p]) {
        return input(format!("{p} is not prime"));
    }
    if n % p != 0 {
        return input(format!("{p} does not divide the group order {n}"));
    }
    let target = p_part(n, p) as usize;
    let mut sub = Subgroup::trivial(g);
    while sub.order() < target {
        let norm = normalizer(g, &sub);
        let x = norm
            .members()
            .iter()
            .copied()
            .find(|&x| !sub.contains(x) && sub.contains(g.pow(x, p as i64)))
            .expect("a p-element exists in N(P)/P while P is not Sylow");
        let mut gens = sub.generators().to_vec();
        gens.push(x);
        let members = g.extend_closure(sub.members(), &gens);
        sub = Subgroup::with_members(g, members, gens);
    }
    Ok(sub)
}

/// Largest normal `p`-subgroup.
pub fn p_core(g: &Arc<Group>, p: u64) -> Subgroup {
    match sylow(g, p) {
        Ok(s) => core(g, &s),
        Err(_) => Subgroup::trivial(g),
    }
}

/// Product of the `p`-cores over primes dividing `|G|`.
pub fn fitting(g: &Arc<Group>) -> Subgroup {
    let mut f = Subgroup::trivial(g);
    for p in prime_factors(g.order() as u64) {
        f = f.join(&p_core(g, p));
    }
    f
}

/// Every normal subgroup, sorted by order and then by member list.
pub fn normal_subgroups(g: &Arc<Group>) -> Vec<Subgroup> {
    let class_closures: Vec<Subgroup> = g.classes()[1..]
        .iter()
        .map(|c| normal_closure(g, &[c.representative]))
        .collect();
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut all = vec![Subgroup::trivial(g)];
    seen.insert(all[0].set().clone());
    for c in &class_closures {
        if seen.insert(c.set().clone()) {
            all.push(c.clone());
        }
    }
    let mut i = 0;
    while i < all.len() {
        for c in &class_closures {
            if c.is_subgroup_of(&all[i]) {
                continue;
            }
            let j = all[i].join(c);
            if seen.insert(j.set().clone()) {
                all.push(j);
            }
        }
        i += 1;
    }
    all.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
    all
}

/// Nontrivial normal subgroups containing no smaller nontrivial normal subgroup.
pub fn minimal_normals(g: &Arc<Group>) -> Vec<Subgroup> {
    let normals = normal_subgroups(g);
    let nontrivial: Vec<&Subgroup> = normals.iter().filter(|n| !n.is_trivial()).collect();
    nontrivial
        .iter()
        .filter(|n| {
            !nontrivial
                .iter()
                .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
        })
        .map(|n| (*n).clone())
        .collect()
}

pub fn socle(g: &Arc<Group>) -> Subgroup {
    minimal_normals(g)
        .iter()
        .fold(Subgroup::trivial(g), |acc, n| acc.join(n))
}

/// Nilpotency as "direct product of Sylow subgroups": for every prime the
/// elements of `p`-power order number exactly `|H|_p`.
pub fn is_nilpotent(h: &Subgroup) -> bool {
    let g = h.parent();
    let n = h.order() as u64;
    prime_factors(n).into_iter().all(|p| {
        let count = h
            .members()
            .iter()
            .filter(|&&x| is_prime_power_of(g.element_order(x), p))
            .count() as u64;
        count == p_part(n, p)
    })
}

/// Nilpotency via the lower central series reaching the identity.
pub fn is_nilpotent_by_central_series(h: &Subgroup) -> bool {
    let mut gamma = h.clone();
    loop {
        if gamma.is_trivial() {
            return true;
        }
        let next = commutator_subgroup(&gamma, h);
        if next.order() == gamma.order() {
            return false;
        }
        gamma = next;
    }
}

/// Elements of `h` whose order is a power of `p` (the Sylow subgroup when `h`
/// is nilpotent).
pub fn p_elements(h: &Subgroup, p: u64) -> Vec<usize> {
    let g = h.parent();
    h.members()
        .iter()
        .copied()
        .filter(|&x| is_prime_power_of(g.element_order(x), p))
        .collect()
}

#[derive(Clone, Debug)]
pub enum StructureQuery {
    Center,
    DerivedSubgroup,
    Fitting,
    Socle,
    MinimalNormals,
    Sylow(u64),
    Normalizer(Subgroup),
    Centralizer(usize),
    Core(Subgroup),
}

pub fn structure_query(g: &Arc<Group>, which: &StructureQuery) -> Result<Vec<Subgroup>> {
    Ok(match which {
        StructureQuery::Center => vec![center(g)],
        StructureQuery::DerivedSubgroup => vec![derived_subgroup(g)],
        StructureQuery::Fitting => vec![fitting(g)],
        StructureQuery::Socle => vec![socle(g)],
        StructureQuery::MinimalNormals => minimal_normals(g),
        StructureQuery::Sylow(p) => vec![sylow(g, *p)?],
        StructureQuery::Normalizer(h) => vec![normalizer(g, h)],
        StructureQuery::Centralizer(x) => {
            if *x >= g.order() {
                return input(format!("element index {x} out of range"));
            }
            vec![centralizer(g, *x)]
        }
        StructureQuery::Core(h) => vec![core(g, h)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Limits;
    use crate::group::families::{self, group_from_spec};

    fn spec(s: &str) -> Arc<Group> {
        group_from_spec(s, Limits::default()).unwrap()
    }

    /// Normal subgroups by brute force: unions of classes closed under products.
    fn brute_normals(g: &Arc<Group>) -> usize {
        let k = g.num_classes();
        let mut count = 0;
        for mask in 0u64..(1 << (k - 1)) {
            let mut set = BitSet::new(g.order());
            for c in g.classes()[0].members.iter() {
                set.insert(*c);
            }
            for j in 1..k {
                if mask >> (j - 1) & 1 == 1 {
                    for &x in &g.classes()[j].members {
                        set.insert(x);
                    }
                }
            }
            let members: Vec<usize> = set.iter().collect();
            if members.iter().all(|&a| members.iter().all(|&b| set.contains(g.mul(a, b)))) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn normal_subgroup_counts_match_brute_force() {
        for s in ["Sym(4)", "Dih(6)", "Q8", "Cyc(12)", "SL23", "Cyc(3) x Sym(3)"] {
            let g = spec(s);
            assert_eq!(normal_subgroups(&g).len(), brute_normals(&g), "{s}");
        }
    }

    #[test]
    fn documented_structure_examples() {
        let s4 = families::symmetric(4).unwrap();
        assert_eq!(fitting(&s4).order(), 4);
        assert_eq!(derived_subgroup(&s4).order(), 12);
        let s3 = families::symmetric(3).unwrap();
        let mins = minimal_normals(&s3);
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 3);
        let q8 = spec("Q8");
        assert_eq!(center(&q8).order(), 2);
        assert_eq!(derived_subgroup(&q8).order(), 2);
    }

    #[test]
    fn center_matches_centralizer_intersection() {
        for s in ["Q8", "Dih(8)", "SL23", "Q8 x Cyc(3)"] {
            let g = spec(s);
            let mut set = g.full_set();
            for x in 0..g.order() {
                set = set.intersection(centralizer(&g, x).set());
            }
            assert_eq!(&set, center(&g).set(), "{s}");
        }
    }

    #[test]
    fn sylow_orders_and_cores() {
        let s5 = families::symmetric(5).unwrap();
        assert_eq!(sylow(&s5, 2).unwrap().order(), 8);
        assert_eq!(sylow(&s5, 3).unwrap().order(), 3);
        assert_eq!(sylow(&s5, 5).unwrap().order(), 5);
        assert!(sylow(&s5, 7).is_err());
        assert_eq!(fitting(&s5).order(), 1);
        assert_eq!(socle(&s5).order(), 60);
        let sl = spec("SL23");
        assert_eq!(p_core(&sl, 2).order(), 8);
        assert_eq!(fitting(&sl).order(), 8);
    }

    #[test]
    fn nilpotency_tests_agree() {
        for s in ["Sym(3)", "Q8", "Dih(4)", "Dih(6)", "Cyc(12)", "SL23", "Q8 x Cyc(3)", "F21"] {
            let g = spec(s);
            let whole = Subgroup::whole(&g);
            assert_eq!(is_nilpotent(&whole), is_nilpotent_by_central_series(&whole), "{s}");
        }
        assert!(is_nilpotent(&Subgroup::whole(&spec("Q8 x Cyc(3)"))));
        assert!(!is_nilpotent(&Subgroup::whole(&spec("Dih(6)"))));
    }

    #[test]
    fn core_is_largest_normal_subgroup_inside() {
        let s4 = families::symmetric(4).unwrap();
        let s3 = Subgroup::generated(&s4, &[s4.index_of(&crate::Perm::parse("(1 2 3)", Some(4)).unwrap()).unwrap(),
            s4.index_of(&crate::Perm::parse("(1 2)", Some(4)).unwrap()).unwrap()]);
        assert_eq!(core(&s4, &s3).order(), 1);
        let d8 = sylow(&s4, 2).unwrap();
        assert_eq!(core(&s4, &d8).order(), 4);
    }
}
