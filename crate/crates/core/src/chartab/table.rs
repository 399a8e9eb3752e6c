use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::class_function::ClassFunction;
use super::dixon;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{BitSet, Group, Subgroup};

/// The irreducible characters of a group, trivial character first.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<Group>,
    irreducibles: Vec<ClassFunction>,
    degrees: Vec<u64>,
    prime: u64,
}

/// Serializable form of a table.
#[derive(Clone, Debug, Serialize)]
pub struct TableExport {
    pub order: usize,
    pub classes: Vec<ClassExport>,
    pub degrees: Vec<u64>,
    pub characters: Vec<Vec<String>>,
}

/// Exact orthogonality checks on a computed table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Orthogonality {
    pub rows: bool,
    pub columns: bool,
    pub degree_squares: bool,
}

impl Orthogonality {
    pub fn holds(&self) -> bool {
        self.rows && self.columns && self.degree_squares
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassExport {
    pub representative: String,
    pub size: usize,
    pub element_order: u64,
}

pub fn character_table(g: &Arc<Group>) -> Result<CharacterTable> {
    let (prime, raw) = dixon::irreducibles(g)?;
    let (irreducibles, degrees) = dixon::sorted(g, raw);
    let sum: u64 = degrees.iter().map(|d| d * d).sum();
    if sum != g.order() as u64 {
        return Err(Error::Falsification(format!("squared degrees sum to {sum}, not |G| = {}", g.order())));
    }
    Ok(CharacterTable {
        group: g.clone(),
        irreducibles,
        degrees,
        prime,
    })
}

impl CharacterTable {
    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn get(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// The prime used for the modular eigenvector computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Nonzero multiplicities `⟨f, χᵢ⟩`.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<(usize, Cyclotomic)>> {
        let mut out = Vec::new();
        for (i, chi) in self.irreducibles.iter().enumerate() {
            let m = f.inner_product(chi)?;
            if !m.is_zero() {
                out.push((i, m));
            }
        }
        Ok(out)
    }

    /// Multiplicities when they are all nonnegative integers.
    pub fn character_multiplicities(&self, f: &ClassFunction) -> Result<Option<Vec<(usize, u64)>>> {
        let mut out = Vec::new();
        for (i, m) in self.decompose(f)? {
            match m.to_rational() {
                Some(q) if q.is_integer() && !q.is_negative() => {
                    out.push((i, q.to_integer().try_into().unwrap_or(u64::MAX)));
                }
                _ => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    pub fn is_character(&self, f: &ClassFunction) -> Result<bool> {
        Ok(self.character_multiplicities(f)?.is_some_and(|m| !m.is_empty()))
    }

    /// `ker χ` (classes where `χ(g) = χ(1)`) and whether it is trivial.
    pub fn kernel_and_faithful(&self, chi: &ClassFunction) -> Result<(Subgroup, bool)> {
        if !self.is_character(chi)? {
            return Err(Error::Precondition("kernel requested for a class function that is not a character".into()));
        }
        let k = kernel(chi);
        let faithful = k.is_trivial();
        Ok((k, faithful))
    }

    /// Indices of the faithful irreducible characters.
    pub fn faithful_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| kernel(&self.irreducibles[i]).is_trivial()).collect()
    }

    /// Irreducibles whose kernel contains none of the given normal subgroups.
    pub fn avoiding(&self, normals: &[Subgroup]) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| {
                let k = kernel(&self.irreducibles[i]);
                normals.iter().all(|n| !n.is_subgroup_of(&k))
            })
            .collect()
    }

    /// The character `Σ mᵢ χᵢ`.
    pub fn combination(&self, coefficients: &[(usize, BigRational)]) -> ClassFunction {
        let mut acc = ClassFunction::zero(&self.group);
        for (i, q) in coefficients {
            if !q.is_zero() {
                acc = acc.add(&self.irreducibles[*i].scale(q)).expect("same group");
            }
        }
        acc
    }

    /// `⟨χᵢ, χⱼ⟩ = δᵢⱼ`, `Σ_χ χ(x) conj χ(y) = δ |C_G(x)|` and `Σ χ(1)² = |G|`.
    pub fn orthogonality(&self) -> Orthogonality {
        let g = &self.group;
        let irr = &self.irreducibles;
        let rows = irr.iter().enumerate().all(|(i, a)| {
            irr.iter()
                .enumerate()
                .all(|(j, b)| a.inner_product(b).is_ok_and(|v| v == Cyclotomic::from_integer((i == j) as i64)))
        });
        let k = g.num_classes();
        let columns = irr.len() == k
            && (0..k).all(|x| {
                (0..k).all(|y| {
                    let s: Cyclotomic = irr.iter().map(|c| c.value(x) * &c.value(y).conj()).sum();
                    let expected = if x == y { (g.order() / g.classes()[x].size) as i64 } else { 0 };
                    s == Cyclotomic::from_integer(expected)
                })
            });
        let degree_squares = self.degrees.iter().map(|d| d * d).sum::<u64>() == g.order() as u64;
        Orthogonality {
            rows,
            columns,
            degree_squares,
        }
    }

    pub fn export(&self) -> TableExport {
        let g = &self.group;
        TableExport {
            order: g.order(),
            classes: g
                .classes()
                .iter()
                .map(|c| ClassExport {
                    representative: g.element(c.representative).to_string(),
                    size: c.size,
                    element_order: g.element_order(c.representative),
                })
                .collect(),
            degrees: self.degrees.clone(),
            characters: self.irreducibles.iter().map(|c| c.to_text()).collect(),
        }
    }
}

/// Union of the classes on which `χ` takes the value `χ(1)`.
pub fn kernel(chi: &ClassFunction) -> Subgroup {
    let g = chi.group();
    let d = chi.degree();
    let mut set = BitSet::new(g.order());
    for (c, v) in g.classes().iter().zip(chi.values()) {
        if v == d {
            for &x in &c.members {
                set.insert(x);
            }
        }
    }
    Subgroup::from_closed_set(g, set)
}
