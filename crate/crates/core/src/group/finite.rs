//! Groups small enough to list: indexed elements, inverses, element
//! orders, conjugacy classes in canonical order.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;

use super::bitset::BitSet;
use super::perm::Perm;
use super::schreier::PermGroup;
use crate::config::Limits;
use crate::error::{Error, Result};

/// A conjugacy class; `representative` is its lexicographically least element.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub size: usize,
    pub members: Vec<usize>,
}

/// A finite permutation group with every element enumerated.
///
/// Element `0` is the identity. Elements are sorted lexicographically by
/// image arrays, and classes by `(size, representative)`.
pub struct Group {
    perm: PermGroup,
    limits: Limits,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    class_of: Vec<u32>,
    classes: Vec<ConjugacyClass>,
    generators: Vec<usize>,
    exponent: u64,
    table: OnceLock<Vec<u32>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field("generators", &self.perm.generators())
            .finish()
    }
}

impl Group {
    pub fn new(perm: PermGroup, limits: Limits) -> Result<Arc<Group>> {
        let order = perm.order_u64().unwrap_or(u64::MAX);
        if order > limits.elements as u64 {
            return Err(Error::Capacity {
                what: "group order for element enumeration",
                size: order,
                bound: limits.elements as u64,
            });
        }
        let mut elements = perm.elements();
        elements.sort();
        let index: HashMap<Perm, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i as u32))
            .collect();
        let inverse = elements.iter().map(|g| index[&g.inverse()]).collect();
        let orders: Vec<u32> = elements.iter().map(|g| g.order() as u32).collect();
        let exponent = orders.iter().fold(1u64, |acc, &o| acc.lcm(&(o as u64)));
        let generators = perm.generators().iter().map(|g| index[g] as usize).collect();
        let mut group = Group {
            perm,
            limits,
            elements,
            index,
            inverse,
            orders,
            class_of: Vec::new(),
            classes: Vec::new(),
            generators,
            exponent,
            table: OnceLock::new(),
        };
        group.compute_classes();
        Ok(Arc::new(group))
    }

    pub fn from_generators(degree: usize, generators: Vec<Perm>) -> Result<Arc<Group>> {
        Group::new(PermGroup::new(degree, generators)?, Limits::default())
    }

    fn compute_classes(&mut self) {
        let n = self.elements.len();
        let mut class_of = vec![u32::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let id = raw.len() as u32;
            class_of[start] = id;
            let mut members = vec![start];
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for gi in 0..self.generators.len() {
                    let g = self.generators[gi];
                    let y = self.conjugate(x, g);
                    if class_of[y] == u32::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            raw.push(members);
        }
        // Sorted element indices make the first member the least element.
        raw.sort_by_key(|m| (m.len(), m[0]));
        for (k, m) in raw.iter().enumerate() {
            for &x in m {
                class_of[x] = k as u32;
            }
        }
        self.classes = raw
            .into_iter()
            .map(|members| ConjugacyClass {
                representative: members[0],
                size: members.len(),
                members,
            })
            .collect();
        self.class_of = class_of;
    }

    pub fn perm_group(&self) -> &PermGroup {
        &self.perm
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).map(|&i| i as usize)
    }

    /// Indices of the stored generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.orders[i] as u64
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        if let Some(t) = self.table.get() {
            return t[a * self.elements.len() + b] as usize;
        }
        self.index[&self.elements[a].mul(&self.elements[b])] as usize
    }

    /// Builds the full multiplication table when the group is at most the
    /// lattice bound; later products become lookups.
    pub fn ensure_table(&self) {
        let n = self.elements.len();
        if n > self.limits.subgroup_lattice {
            return;
        }
        self.table.get_or_init(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &self.elements {
                for b in &self.elements {
                    t.push(self.index[&a.mul(b)]);
                }
            }
            t
        });
    }

    /// `g⁻¹ x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn pow(&self, x: usize, e: i64) -> usize {
        let o = self.orders[x] as i64;
        let e = e.rem_euclid(o);
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    /// Class index of `rep⁻¹` for class `k`.
    pub fn inverse_class(&self, k: usize) -> usize {
        self.class_of(self.inv(self.classes[k].representative))
    }

    /// Class index of `rep^e` for class `k`.
    pub fn power_class(&self, k: usize, e: i64) -> usize {
        self.class_of(self.pow(self.classes[k].representative, e))
    }

    /// `conjugacy_classes`: `(representative, size)` in canonical order.
    pub fn conjugacy_classes(&self) -> Vec<(Perm, usize)> {
        self.classes
            .iter()
            .map(|c| (self.elements[c.representative].clone(), c.size))
            .collect()
    }

    pub fn full_set(&self) -> BitSet {
        BitSet::from_indices(self.order(), 0..self.order())
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.elements.len()
    }

    /// Closure of `generators` under multiplication, as a sorted index list.
    pub fn closure(&self, generators: &[usize]) -> Vec<usize> {
        self.extend_closure(&[0], generators)
    }

    /// Closure of `base ∪ extra` when `base` is already a subgroup.
    pub fn extend_closure(&self, base: &[usize], generators: &[usize]) -> Vec<usize> {
        let mut set = BitSet::new(self.order());
        let mut members: Vec<usize> = Vec::with_capacity(base.len() * 2);
        for &b in base {
            if set.insert(b) {
                members.push(b);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in generators {
                let y = self.mul(x, g);
                if set.insert(y) {
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::families;

    #[test]
    fn classes_of_symmetric_groups() {
        let s3 = families::symmetric(3).unwrap();
        let sizes: Vec<usize> = s3.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        let s4 = families::symmetric(4).unwrap();
        let mut sizes: Vec<usize> = s4.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 24);
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn identity_is_first_and_representatives_are_minimal() {
        let g = families::dihedral(5).unwrap();
        assert!(g.element(0).is_identity());
        assert_eq!(g.class_of(0), 0);
        for c in g.classes() {
            assert_eq!(c.representative, *c.members.iter().min().unwrap());
            assert_eq!(g.order() % c.size, 0);
        }
    }

    #[test]
    fn table_and_direct_products_agree() {
        let g = families::symmetric(4).unwrap();
        let direct: Vec<usize> = (0..24).map(|a| g.mul(a, 23 - a)).collect();
        g.ensure_table();
        let tabled: Vec<usize> = (0..24).map(|a| g.mul(a, 23 - a)).collect();
        assert_eq!(direct, tabled);
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let limits = Limits {
            elements: 100,
            ..Limits::default()
        };
        let s5 = families::symmetric_perm(5);
        assert!(matches!(Group::new(s5, limits), Err(Error::Capacity { .. })));
    }
}
