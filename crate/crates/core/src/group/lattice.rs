//! Subgroups up to conjugacy by extension: every class representative is
//! extended by each element of prime-power order, new subgroups are
//! recorded together with all of their conjugates.

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::bitset::BitSet;
use super::finite::Group;
use super::structure::{derived_of, is_nilpotent, p_elements, p_part, prime_factors};
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// Which subgroups to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgroupFilter {
    All,
    Nilpotent,
    Cyclic,
    /// A `p`-group times a cyclic group of order prime to `p`.
    Elementary,
    /// Elementary and generated by at most two elements.
    ElementaryRankLe2,
}

impl SubgroupFilter {
    pub fn name(self) -> &'static str {
        match self {
            SubgroupFilter::All => "all",
            SubgroupFilter::Nilpotent => "nilpotent",
            SubgroupFilter::Cyclic => "cyclic",
            SubgroupFilter::Elementary => "elementary",
            SubgroupFilter::ElementaryRankLe2 => "elementary_rank_le_2",
        }
    }

    pub fn parse(s: &str) -> Result<SubgroupFilter> {
        Ok(match s {
            "all" => SubgroupFilter::All,
            "nilpotent" => SubgroupFilter::Nilpotent,
            "cyclic" => SubgroupFilter::Cyclic,
            "elementary" => SubgroupFilter::Elementary,
            "rank2" | "elementary_rank_le_2" => SubgroupFilter::ElementaryRankLe2,
            _ => return Err(Error::Input(format!("unknown subgroup family `{s}`"))),
        })
    }

    pub fn accepts(self, h: &Subgroup) -> bool {
        match self {
            SubgroupFilter::All => true,
            SubgroupFilter::Nilpotent => is_nilpotent(h),
            SubgroupFilter::Cyclic => is_cyclic(h),
            SubgroupFilter::Elementary => is_elementary(h),
            SubgroupFilter::ElementaryRankLe2 => is_elementary(h) && nilpotent_rank(h) <= 2,
        }
    }
}

pub fn is_cyclic(h: &Subgroup) -> bool {
    let g = h.parent();
    let n = h.order() as u64;
    h.members().iter().any(|&x| g.element_order(x) == n)
}

/// `P × C` with `P` a `p`-group and `C` cyclic of order prime to `p`.
pub fn is_elementary(h: &Subgroup) -> bool {
    if !is_nilpotent(h) {
        return false;
    }
    let g = h.parent();
    let n = h.order() as u64;
    let primes = prime_factors(n);
    let cyclic_sylow: Vec<bool> = primes
        .iter()
        .map(|&q| {
            let target = p_part(n, q);
            h.members().iter().any(|&x| g.element_order(x) == target)
        })
        .collect();
    let non_cyclic = cyclic_sylow.iter().filter(|c| !**c).count();
    non_cyclic <= 1
}

/// Minimal number of generators of a nilpotent subgroup: the largest
/// `dim P/Φ(P)` over its Sylow subgroups.
pub fn nilpotent_rank(h: &Subgroup) -> usize {
    assert!(is_nilpotent(h), "rank formula needs a nilpotent group");
    let g = h.parent();
    let n = h.order() as u64;
    let mut rank = 0;
    for p in prime_factors(n) {
        let set = BitSet::from_indices(g.order(), p_elements(h, p));
        let sylow = Subgroup::from_closed_set(g, set);
        let mut seeds: Vec<usize> = sylow.members().iter().map(|&x| g.pow(x, p as i64)).collect();
        seeds.extend_from_slice(derived_of(&sylow).generators());
        let frattini = g.closure(&seeds);
        let quotient = (sylow.order() / frattini.len()) as u64;
        let mut d = 0;
        let mut q = quotient;
        while q > 1 {
            q /= p;
            d += 1;
        }
        rank = rank.max(d);
    }
    rank
}

fn canonical_representative(conjugates: &[Subgroup]) -> Subgroup {
    conjugates
        .iter()
        .min_by(|a, b| a.members().cmp(b.members()))
        .expect("nonempty class")
        .clone()
}

/// `subgroups_up_to_conjugacy`: one canonical representative per class,
/// sorted by order and then by member list.
pub fn subgroups_up_to_conjugacy(g: &Arc<Group>, filter: SubgroupFilter) -> Result<Vec<Subgroup>> {
    let bound = g.limits().subgroup_lattice;
    if g.order() > bound {
        return Err(Error::Capacity {
            what: "group order for subgroup enumeration",
            size: g.order() as u64,
            bound: bound as u64,
        });
    }
    g.ensure_table();
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut reps: Vec<Subgroup> = Vec::new();

    let record = |h: Subgroup, seen: &mut HashSet<BitSet>, reps: &mut Vec<Subgroup>| {
        let conj = h.conjugates();
        for c in &conj {
            seen.insert(c.set().clone());
        }
        reps.push(canonical_representative(&conj));
    };

    if filter == SubgroupFilter::Cyclic {
        for x in 0..g.order() {
            let h = Subgroup::generated(g, &[x]);
            if !seen.contains(h.set()) {
                record(h, &mut seen, &mut reps);
            }
        }
    } else {
        // Subgroup-closed families can be pruned during the search.
        let prune: fn(&Subgroup) -> bool = match filter {
            SubgroupFilter::All => |_| true,
            SubgroupFilter::Nilpotent => is_nilpotent,
            _ => is_elementary,
        };
        let candidates: Vec<usize> = (1..g.order())
            .filter(|&x| prime_factors(g.element_order(x)).len() == 1)
            .collect();
        let mut rejected: HashSet<BitSet> = HashSet::new();
        record(Subgroup::trivial(g), &mut seen, &mut reps);
        let mut i = 0;
        while i < reps.len() {
            let u = reps[i].clone();
            for &x in &candidates {
                if u.contains(x) {
                    continue;
                }
                let mut gens = u.generators().to_vec();
                gens.push(x);
                let members = g.extend_closure(u.members(), &gens);
                let v = Subgroup::with_members(g, members, gens);
                if seen.contains(v.set()) || rejected.contains(v.set()) {
                    continue;
                }
                if !prune(&v) {
                    rejected.insert(v.set().clone());
                    continue;
                }
                record(v, &mut seen, &mut reps);
            }
            i += 1;
        }
    }
    let mut out: Vec<Subgroup> = reps.into_iter().filter(|h| filter.accepts(h)).collect();
    out.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Limits;
    use crate::group::families::group_from_spec;

    fn spec(s: &str) -> Arc<Group> {
        group_from_spec(s, Limits::default()).unwrap()
    }

    fn orders(g: &Arc<Group>, f: SubgroupFilter) -> Vec<usize> {
        subgroups_up_to_conjugacy(g, f).unwrap().iter().map(|h| h.order()).collect()
    }

    /// Every subgroup by brute force: closures of all pairs of elements
    /// joined repeatedly, then grouped into conjugacy classes.
    fn brute_classes(g: &Arc<Group>) -> usize {
        let mut all: HashSet<BitSet> = HashSet::new();
        let mut frontier: Vec<Vec<usize>> = vec![vec![0]];
        all.insert(BitSet::from_indices(g.order(), [0]));
        while let Some(h) = frontier.pop() {
            for x in 0..g.order() {
                let mut gens = h.clone();
                gens.push(x);
                let members = g.closure(&gens);
                let set = BitSet::from_indices(g.order(), members.iter().copied());
                if all.insert(set) {
                    frontier.push(members);
                }
            }
        }
        let mut classes: Vec<HashSet<BitSet>> = Vec::new();
        for s in &all {
            if classes.iter().any(|c| c.contains(s)) {
                continue;
            }
            let h = Subgroup::from_closed_set(g, s.clone());
            classes.push(h.conjugates().into_iter().map(|c| c.set().clone()).collect());
        }
        classes.len()
    }

    #[test]
    fn documented_examples() {
        assert_eq!(orders(&spec("Sym(3)"), SubgroupFilter::Nilpotent), vec![1, 2, 3]);
        assert_eq!(orders(&spec("Cyc(4)"), SubgroupFilter::Cyclic), vec![1, 2, 4]);
        assert_eq!(orders(&spec("Alt(5)"), SubgroupFilter::Nilpotent), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn full_lattice_matches_brute_force() {
        for s in ["Sym(4)", "Q8", "Dih(6)", "SL23", "Cyc(3) x Sym(3)", "F21"] {
            let g = spec(s);
            assert_eq!(
                subgroups_up_to_conjugacy(&g, SubgroupFilter::All).unwrap().len(),
                brute_classes(&g),
                "{s}"
            );
        }
        // A₅ has 9 classes of subgroups, including itself (perfect).
        assert_eq!(orders(&spec("Alt(5)"), SubgroupFilter::All).len(), 9);
        assert_eq!(orders(&spec("Sym(5)"), SubgroupFilter::All).len(), 19);
    }

    #[test]
    fn pruned_searches_match_filtered_full_lattice() {
        for s in ["Sym(4)", "SL23", "Dih(12)", "Q16", "Cyc(3) x Sym(3)"] {
            let g = spec(s);
            let all = subgroups_up_to_conjugacy(&g, SubgroupFilter::All).unwrap();
            for f in [
                SubgroupFilter::Nilpotent,
                SubgroupFilter::Cyclic,
                SubgroupFilter::Elementary,
                SubgroupFilter::ElementaryRankLe2,
            ] {
                let direct: Vec<Vec<usize>> = subgroups_up_to_conjugacy(&g, f)
                    .unwrap()
                    .iter()
                    .map(|h| h.members().to_vec())
                    .collect();
                let filtered: Vec<Vec<usize>> = all
                    .iter()
                    .filter(|h| f.accepts(h))
                    .map(|h| h.members().to_vec())
                    .collect();
                assert_eq!(direct, filtered, "{s} {f:?}");
            }
        }
    }

    #[test]
    fn rank_matches_two_generator_search() {
        for s in ["Q8", "Dih(4)", "Cyc(2) x Cyc(2) x Cyc(2)", "Q8 x Cyc(3)", "Cyc(2) x Cyc(4)"] {
            let g = spec(s);
            for h in subgroups_up_to_conjugacy(&g, SubgroupFilter::Nilpotent).unwrap() {
                let two_generated = h.members().iter().any(|&a| {
                    h.members().iter().any(|&b| g.closure(&[a, b]).len() == h.order())
                });
                assert_eq!(nilpotent_rank(&h) <= 2, two_generated, "{s} {h:?}");
            }
        }
    }

    #[test]
    fn capacity_bound_is_enforced() {
        let limits = Limits {
            subgroup_lattice: 50,
            ..Limits::default()
        };
        let g = group_from_spec("Sym(5)", limits).unwrap();
        assert!(matches!(
            subgroups_up_to_conjugacy(&g, SubgroupFilter::All),
            Err(Error::Capacity { .. })
        ));
    }
}
