//! Deterministic Schreier–Sims: base, strong generating set, exact order
//! and membership by sifting.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use super::perm::Perm;
use crate::error::{input, Result};

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// Strong generators introduced at this level; the level group is
    /// generated by these together with those of all deeper levels.
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    /// `transversal[x]` maps the base point to `x`.
    transversal: Vec<Option<Perm>>,
}

#[derive(Clone, Debug)]
struct Chain {
    degree: usize,
    levels: Vec<Level>,
}

impl Chain {
    fn sift(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut g = g.clone();
        for k in from..self.levels.len() {
            let lv = &self.levels[k];
            let x = g.image(lv.base);
            match &lv.transversal[x] {
                Some(u) => g = g.mul(&u.inverse()),
                None => return (g, k),
            }
        }
        (g, self.levels.len())
    }

    fn rebuild_orbit(&mut self, k: usize) {
        let gens: Vec<Perm> = self.levels[k..]
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect();
        let lv = &mut self.levels[k];
        let mut transversal: Vec<Option<Perm>> = vec![None; self.degree];
        transversal[lv.base] = Some(Perm::identity(self.degree));
        let mut orbit = vec![lv.base];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            let ux = transversal[x].clone().unwrap();
            for s in &gens {
                let y = s.image(x);
                if transversal[y].is_none() {
                    transversal[y] = Some(ux.mul(s));
                    orbit.push(y);
                }
            }
            i += 1;
        }
        lv.orbit = orbit;
        lv.transversal = transversal;
    }

    fn add_generator(&mut self, level: usize, g: Perm) {
        if level == self.levels.len() {
            let base = (0..self.degree)
                .find(|&p| g.image(p) != p)
                .expect("identity is never added");
            self.levels.push(Level {
                base,
                gens: Vec::new(),
                orbit: Vec::new(),
                transversal: Vec::new(),
            });
        }
        self.levels[level].gens.push(g);
        for k in 0..=level {
            self.rebuild_orbit(k);
        }
    }

    fn build(degree: usize, generators: &[Perm]) -> Chain {
        let mut chain = Chain {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            let (h, j) = chain.sift(g, 0);
            if !h.is_identity() {
                chain.add_generator(j, h);
            }
        }
        let mut i = chain.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let k = i as usize;
            let gens: Vec<Perm> = chain.levels[k..]
                .iter()
                .flat_map(|l| l.gens.iter().cloned())
                .collect();
            let orbit = chain.levels[k].orbit.clone();
            for &x in &orbit {
                let ux = chain.levels[k].transversal[x].clone().unwrap();
                for s in &gens {
                    let y = s.image(x);
                    let uy = chain.levels[k].transversal[y].clone().unwrap();
                    let schreier = ux.mul(s).mul(&uy.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = chain.sift(&schreier, k + 1);
                    if !h.is_identity() {
                        chain.add_generator(j, h);
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
        chain
    }
}

/// A permutation group with a stabiliser chain.
///
/// Cloning is cheap; the chain is shared.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: Arc<Chain>,
    order: BigUint,
}

impl PermGroup {
    /// `build_group`: validates degrees and runs Schreier–Sims.
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        if degree == 0 {
            return input("degree must be positive");
        }
        for g in &generators {
            if g.degree() != degree {
                return input(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                ));
            }
        }
        let generators: Vec<Perm> = generators.into_iter().filter(|g| !g.is_identity()).collect();
        let chain = Chain::build(degree, &generators);
        let order = chain
            .levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()));
        Ok(PermGroup {
            degree,
            generators,
            chain: Arc::new(chain),
            order,
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// The order as a machine integer when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(&self.order).ok()
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.base).collect()
    }

    /// Fundamental orbit lengths along the base.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.chain.sift(g, 0).0.is_identity()
    }

    /// Lists every element as a product of transversal representatives.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for lv in self.chain.levels.iter().rev() {
            let reps: Vec<&Perm> = lv.orbit.iter().map(|&x| lv.transversal[x].as_ref().unwrap()).collect();
            let mut next = Vec::with_capacity(out.len() * reps.len());
            for g in &out {
                for u in &reps {
                    next.push(g.mul(u));
                }
            }
            out = next;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn closure(gens: &[Perm], degree: usize) -> HashSet<Perm> {
        let mut set: HashSet<Perm> = HashSet::new();
        let mut frontier = vec![Perm::identity(degree)];
        set.insert(Perm::identity(degree));
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = x.mul(g);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn orders_of_small_groups() {
        let s3 = PermGroup::new(3, vec![p("(1 2 3)", 3), p("(1 2)", 3)]).unwrap();
        assert_eq!(s3.order_u64(), Some(6));
        assert_eq!(PermGroup::new(1, vec![]).unwrap().order_u64(), Some(1));
        let s6 = PermGroup::new(6, vec![p("(1 2 3 4 5 6)", 6), p("(1 2)", 6)]).unwrap();
        assert_eq!(s6.order_u64(), Some(720));
        let m11 = PermGroup::new(
            11,
            vec![p("(1 2 3 4 5 6 7 8 9 10 11)", 11), p("(3 7 11 8)(4 10 5 6)", 11)],
        )
        .unwrap();
        assert_eq!(m11.order_u64(), Some(7920));
    }

    #[test]
    fn order_matches_closure_and_membership_is_exact() {
        let gens = vec![p("(1 2 3 4)(5 6)", 7), p("(1 3)(2 7)", 7), p("(4 5 6)", 7)];
        let g = PermGroup::new(7, gens.clone()).unwrap();
        let brute = closure(&gens, 7);
        assert_eq!(g.order_u64(), Some(brute.len() as u64));
        let elts: HashSet<Perm> = g.elements().into_iter().collect();
        assert_eq!(elts, brute);
        let s7 = PermGroup::new(7, vec![p("(1 2 3 4 5 6 7)", 7), p("(1 2)", 7)]).unwrap();
        for x in s7.elements().iter().step_by(37) {
            assert_eq!(g.contains(x), brute.contains(x));
        }
    }

    #[test]
    fn degree_mismatch_is_an_input_error() {
        assert!(PermGroup::new(4, vec![p("(1 2)", 3)]).is_err());
    }
}
