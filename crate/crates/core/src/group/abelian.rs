//! Abelianization `H/[H,H]` as a product of cyclic groups, with an explicit
//! projection.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::structure::derived_of;
use super::subgroup::Subgroup;
use crate::linalg::smith::smith;

/// `H/[H,H] ≅ ℤ/d₁ × … × ℤ/d_k` with `d₁ | d₂ | … | d_k` and each `dᵢ > 1`.
#[derive(Clone, Debug)]
pub struct AbelianInvariants {
    subgroup: Subgroup,
    derived: Subgroup,
    factors: Vec<u64>,
    /// Exponent vectors aligned with `subgroup.members()`.
    coords: Vec<Vec<u64>>,
}

impl AbelianInvariants {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn derived(&self) -> &Subgroup {
        &self.derived
    }

    /// Invariant factors in divisibility order; empty for a perfect group.
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// `|H/[H,H]|`.
    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// Exponent of `H/[H,H]` (1 when perfect).
    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    /// Exponent vector of a parent element of `H`.
    pub fn project(&self, x: usize) -> Option<&[u64]> {
        let pos = self.subgroup.members().binary_search(&x).ok()?;
        Some(&self.coords[pos])
    }

    /// Every character tuple `a` with `0 ≤ aᵢ < dᵢ`, in lexicographic order.
    pub fn dual_tuples(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &d in &self.factors {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..d).map(move |a| {
                        let mut t = t.clone();
                        t.push(a);
                        t
                    })
                })
                .collect();
        }
        out
    }

    /// The linear character indexed by `a`, evaluated at `x`, as an exponent
    /// `k` of `ζ_E` where `E` is [`AbelianInvariants::exponent`].
    pub fn character_exponent(&self, a: &[u64], x: usize) -> Option<u64> {
        let e = self.exponent();
        let w = self.project(x)?;
        Some(
            a.iter()
                .zip(w)
                .zip(&self.factors)
                .map(|((&ai, &wi), &d)| ai * wi % d * (e / d))
                .sum::<u64>()
                % e,
        )
    }
}

/// Abelianization of a subgroup.
pub fn abelianization(h: &Subgroup) -> AbelianInvariants {
    let g = h.parent();
    let derived = derived_of(h);
    let members = h.members();
    let pos = |x: usize| members.binary_search(&x).expect("element of H");

    // Label cosets xD.
    let mut label = vec![usize::MAX; members.len()];
    let mut reps = Vec::new();
    for (i, &x) in members.iter().enumerate() {
        if label[i] != usize::MAX {
            continue;
        }
        for &d in derived.members() {
            label[pos(g.mul(x, d))] = reps.len();
        }
        reps.push(x);
    }
    let m = reps.len();
    let gens = h.generators().to_vec();
    let r = gens.len();

    // Breadth-first search over the Cayley graph of H/D. Tree edges assign
    // words; every other edge is a relation among the generators.
    let mut word: Vec<Option<Vec<i64>>> = vec![None; m];
    word[label[pos(0)]] = Some(vec![0; r]);
    let mut queue = VecDeque::from([label[pos(0)]]);
    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    let mut edges = Vec::new();
    while let Some(a) = queue.pop_front() {
        for (i, &s) in gens.iter().enumerate() {
            let b = label[pos(g.mul(reps[a], s))];
            let mut w = word[a].clone().unwrap();
            w[i] += 1;
            if word[b].is_none() {
                word[b] = Some(w);
                queue.push_back(b);
            } else {
                edges.push((w, b));
            }
        }
    }
    for (w, b) in edges {
        let target = word[b].as_ref().unwrap();
        let rel: Vec<BigInt> = w.iter().zip(target).map(|(x, y)| BigInt::from(x - y)).collect();
        if rel.iter().any(|x| !x.is_zero()) {
            relations.push(rel);
        }
    }

    let (factors, transform) = if r == 0 {
        (Vec::new(), Vec::new())
    } else {
        if relations.is_empty() {
            relations.push(vec![BigInt::zero(); r]);
        }
        let s = smith(&relations, r);
        let mut diag: Vec<u64> = (0..r)
            .map(|i| s.diagonal.get(i).and_then(|d| d.to_u64()).unwrap_or(0))
            .collect();
        assert!(diag.iter().all(|&d| d > 0), "H/[H,H] is finite");
        let keep: Vec<usize> = (0..r).filter(|&i| diag[i] > 1).collect();
        let transform: Vec<(usize, u64)> = keep.iter().map(|&i| (i, diag[i])).collect();
        diag.retain(|&d| d > 1);
        let v = s.v;
        (diag, transform.into_iter().map(|(i, d)| (column(&v, i), d)).collect::<Vec<_>>())
    };
    debug_assert_eq!(factors.iter().product::<u64>() as usize, m);

    let coset_coords: Vec<Vec<u64>> = (0..m)
        .map(|a| {
            let w = word[a].as_ref().unwrap();
            transform
                .iter()
                .map(|(col, d)| {
                    let dot: BigInt = w.iter().zip(col).map(|(x, c)| BigInt::from(*x) * c).sum();
                    dot.mod_floor(&BigInt::from(*d)).to_u64().unwrap()
                })
                .collect()
        })
        .collect();
    let coords = label.iter().map(|&a| coset_coords[a].clone()).collect();
    AbelianInvariants {
        subgroup: h.clone(),
        derived,
        factors,
        coords,
    }
}

fn column(v: &[Vec<BigInt>], j: usize) -> Vec<BigInt> {
    v.iter().map(|row| row[j].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Limits;
    use crate::group::families::group_from_spec;

    fn invariants(spec: &str) -> Vec<u64> {
        let g = group_from_spec(spec, Limits::default()).unwrap();
        abelianization(&Subgroup::whole(&g)).factors().to_vec()
    }

    #[test]
    fn documented_examples() {
        assert_eq!(invariants("Q8"), vec![2, 2]);
        assert_eq!(invariants("Cyc(6)"), vec![6]);
        assert_eq!(invariants("Sym(4)"), vec![2]);
        assert_eq!(invariants("Alt(5)"), Vec::<u64>::new());
        assert_eq!(invariants("Cyc(2) x Cyc(4) x Cyc(3)"), vec![2, 12]);
        assert_eq!(invariants("Cyc(1)"), Vec::<u64>::new());
    }

    #[test]
    fn projection_is_a_homomorphism_with_derived_kernel() {
        for spec in ["Q8", "Dih(6)", "Cyc(2) x Cyc(4)", "SL23", "F21"] {
            let g = group_from_spec(spec, Limits::default()).unwrap();
            let h = Subgroup::whole(&g);
            let ab = abelianization(&h);
            let fs = ab.factors().to_vec();
            for &x in h.members() {
                let px = ab.project(x).unwrap();
                assert_eq!(px.iter().all(|&c| c == 0), ab.derived().contains(x), "{spec}");
                for &y in h.members() {
                    let py = ab.project(y).unwrap();
                    let pxy = ab.project(g.mul(x, y)).unwrap();
                    for i in 0..fs.len() {
                        assert_eq!((px[i] + py[i]) % fs[i], pxy[i]);
                    }
                }
            }
            assert_eq!(ab.order() as usize * ab.derived().order(), h.order());
        }
    }
}
