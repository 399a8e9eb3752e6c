use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::bitset::BitSet;
use super::finite::Group;
use super::perm::Perm;
use super::schreier::PermGroup;
use crate::error::{input, Result};

/// A subgroup's own enumeration, with the map back into the parent.
#[derive(Debug)]
pub struct Embedding {
    pub group: Arc<Group>,
    /// `to_parent[i]` is the parent index of element `i` of `group`.
    pub to_parent: Vec<usize>,
}

/// A subgroup of an enumerated parent, stored as a set of parent indices.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<Group>,
    members: Arc<Vec<usize>>,
    set: Arc<BitSet>,
    generators: Vec<usize>,
    own: Arc<OnceLock<Embedding>>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generator_perms().iter().map(|g| g.to_string()).collect();
        write!(f, "Subgroup(order {}, <{}>)", self.order(), gens.join(", "))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.set == other.set
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// The subgroup generated by the given parent indices.
    pub fn generated(parent: &Arc<Group>, generators: &[usize]) -> Subgroup {
        let gens: Vec<usize> = generators.iter().copied().filter(|&g| g != 0).collect();
        let members = parent.closure(&gens);
        Subgroup::with_members(parent, members, gens)
    }

    pub(crate) fn with_members(parent: &Arc<Group>, members: Vec<usize>, generators: Vec<usize>) -> Subgroup {
        let set = BitSet::from_indices(parent.order(), members.iter().copied());
        Subgroup {
            parent: parent.clone(),
            members: Arc::new(members),
            set: Arc::new(set),
            generators,
            own: Arc::new(OnceLock::new()),
        }
    }

    /// Builds a subgroup from a member set known to be closed.
    pub(crate) fn from_closed_set(parent: &Arc<Group>, set: BitSet) -> Subgroup {
        let members: Vec<usize> = set.iter().collect();
        let mut gens = Vec::new();
        let mut current = BitSet::from_indices(parent.order(), [0]);
        let mut current_list = vec![0];
        for &x in &members {
            if !current.contains(x) {
                gens.push(x);
                current_list = parent.extend_closure(&current_list, &gens);
                current = BitSet::from_indices(parent.order(), current_list.iter().copied());
            }
        }
        Subgroup {
            parent: parent.clone(),
            members: Arc::new(members),
            set: Arc::new(set),
            generators: gens,
            own: Arc::new(OnceLock::new()),
        }
    }

    /// The subgroup generated by permutations, which must lie in the parent.
    pub fn from_perms(parent: &Arc<Group>, perms: &[Perm]) -> Result<Subgroup> {
        let mut gens = Vec::new();
        for p in perms {
            if p.degree() != parent.degree() {
                return input(format!("{p} has degree {} but the group has degree {}", p.degree(), parent.degree()));
            }
            match parent.index_of(p) {
                Some(i) => gens.push(i),
                None => return input(format!("{p} is not an element of the group")),
            }
        }
        Ok(Subgroup::generated(parent, &gens))
    }

    pub fn trivial(parent: &Arc<Group>) -> Subgroup {
        Subgroup::with_members(parent, vec![0], Vec::new())
    }

    pub fn whole(parent: &Arc<Group>) -> Subgroup {
        let gens = parent.generator_indices().to_vec();
        Subgroup::with_members(parent, (0..parent.order()).collect(), gens)
    }

    pub fn parent(&self) -> &Arc<Group> {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn set(&self) -> &BitSet {
        &self.set
    }

    pub fn contains(&self, i: usize) -> bool {
        self.set.contains(i)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_perms(&self) -> Vec<Perm> {
        self.generators.iter().map(|&g| self.parent.element(g).clone()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.set.is_subset(&other.set)
    }

    /// A permutation group on the parent's points generated by this subgroup.
    pub fn perm_group(&self) -> PermGroup {
        PermGroup::new(self.parent.degree(), self.generator_perms()).expect("subgroup generators")
    }

    /// The subgroup as a group in its own right (enumerated once, cached).
    pub fn embedding(&self) -> Result<&Embedding> {
        if let Some(e) = self.own.get() {
            return Ok(e);
        }
        let group = Group::new(self.perm_group(), self.parent.limits())?;
        let to_parent = group
            .elements()
            .iter()
            .map(|p| self.parent.index_of(p).expect("subgroup element lies in parent"))
            .collect();
        let _ = self.own.set(Embedding { group, to_parent });
        Ok(self.own.get().unwrap())
    }

    /// `g⁻¹ H g` for a parent index `g`.
    pub fn conjugate(&self, g: usize) -> Subgroup {
        let members: Vec<usize> = {
            let mut m: Vec<usize> = self.members.iter().map(|&x| self.parent.conjugate(x, g)).collect();
            m.sort_unstable();
            m
        };
        let gens = self.generators.iter().map(|&x| self.parent.conjugate(x, g)).collect();
        Subgroup::with_members(&self.parent, members, gens)
    }

    pub fn is_normalized_by(&self, g: usize) -> bool {
        self.generators.iter().all(|&x| self.contains(self.parent.conjugate(x, g)))
    }

    pub fn is_normal(&self) -> bool {
        self.parent.generator_indices().iter().all(|&g| self.is_normalized_by(g))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_closed_set(&self.parent, self.set.intersection(&other.set))
    }

    /// `⟨self, other⟩`.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().copied().filter(|g| !self.contains(*g)));
        let members = self.parent.extend_closure(&self.members, &gens);
        Subgroup::with_members(&self.parent, members, gens)
    }

    /// All distinct conjugates of this subgroup in the parent.
    pub fn conjugates(&self) -> Vec<Subgroup> {
        let mut seen: HashSet<BitSet> = HashSet::new();
        seen.insert((*self.set).clone());
        let mut out = vec![self.clone()];
        let mut i = 0;
        while i < out.len() {
            for &g in self.parent.generator_indices() {
                let c = out[i].conjugate(g);
                if seen.insert((*c.set).clone()) {
                    out.push(c);
                }
            }
            i += 1;
        }
        out
    }
}
