use std::collections::BTreeSet;

use serde::Serialize;

use super::monomial::MonomialCharacter;
use crate::chartab::{linear_characters_labelled, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::Subgroup;

/// One double-coset term `Ind_{H_τ}^G ψ_τ`, with how often it occurs.
#[derive(Clone, Debug)]
pub struct MackeyTerm {
    pub subgroup: Subgroup,
    pub label: Vec<u64>,
    pub psi: ClassFunction,
    pub multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct MackeyDecomposition {
    pub terms: Vec<MackeyTerm>,
    pub double_cosets: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct MackeyReport {
    pub double_cosets: usize,
    pub distinct_terms: usize,
    pub degree_sum: usize,
    pub expected_degree: usize,
    pub pointwise: bool,
}

impl MackeyDecomposition {
    /// `Σ multiplicity · Ind ψ_τ`.
    pub fn sum(&self) -> Result<ClassFunction> {
        let g = self
            .terms
            .first()
            .map(|t| t.subgroup.parent().clone())
            .ok_or_else(|| Error::Precondition("empty decomposition".into()))?;
        let mut acc = ClassFunction::zero(&g);
        for t in &self.terms {
            let ind = ClassFunction::induce(&t.subgroup, &t.psi)?;
            for _ in 0..t.multiplicity {
                acc = acc.add(&ind)?;
            }
        }
        Ok(acc)
    }

    /// `Σ [G : H_τ]` over double cosets.
    pub fn degree_sum(&self) -> usize {
        self.terms.iter().map(|t| t.subgroup.index() * t.multiplicity).sum()
    }

    pub fn check(&self, phi1: &MonomialCharacter, phi2: &MonomialCharacter) -> Result<MackeyReport> {
        let product = phi1.induced.product(&phi2.induced)?;
        Ok(MackeyReport {
            double_cosets: self.double_cosets,
            distinct_terms: self.terms.len(),
            degree_sum: self.degree_sum(),
            expected_degree: phi1.subgroup.index() * phi2.subgroup.index(),
            pointwise: self.sum()? == product,
        })
    }
}

/// Value of a character of `H` at a parent element of `H`.
fn value_at_parent<'a>(h: &Subgroup, psi: &'a ClassFunction, x: usize) -> Result<&'a Cyclotomic> {
    let emb = h.embedding()?;
    let i = emb
        .group
        .index_of(h.parent().element(x))
        .ok_or_else(|| Error::Precondition("element outside the subgroup".into()))?;
    Ok(psi.at(i))
}

/// `φ₁ · φ₂ = Σ_{τ ∈ H₁\G/H₂} Ind_{H_τ} ψ_τ` with `H_τ = H₁ ∩ τH₂τ⁻¹` and
/// `ψ_τ(x) = ψ₁(x) ψ₂(τ⁻¹xτ)`.
pub fn mackey_decompose(phi1: &MonomialCharacter, phi2: &MonomialCharacter) -> Result<MackeyDecomposition> {
    let g = phi1.subgroup.parent().clone();
    if !std::sync::Arc::ptr_eq(&g, phi2.subgroup.parent()) {
        return Err(Error::Precondition("monomial characters over different groups".into()));
    }
    let (h1, h2) = (&phi1.subgroup, &phi2.subgroup);
    let mut seen = vec![false; g.order()];
    let mut terms: Vec<MackeyTerm> = Vec::new();
    let mut double_cosets = 0;
    for tau in 0..g.order() {
        if seen[tau] {
            continue;
        }
        double_cosets += 1;
        let coset: BTreeSet<usize> = h1
            .members()
            .iter()
            .flat_map(|&a| h2.members().iter().map(move |&b| (a, b)))
            .map(|(a, b)| g.mul(g.mul(a, tau), b))
            .collect();
        for &x in &coset {
            seen[x] = true;
        }
        let members: Vec<usize> = h1
            .members()
            .iter()
            .copied()
            .filter(|&x| h2.contains(g.conjugate(x, tau)))
            .collect();
        let h_tau = Subgroup::generated(&g, &members);
        let own = h_tau.embedding()?.group.clone();
        let mut values = Vec::with_capacity(own.num_classes());
        for c in own.classes() {
            let x = h_tau.embedding()?.to_parent[c.representative];
            let a = value_at_parent(h1, &phi1.psi, x)?;
            let b = value_at_parent(h2, &phi2.psi, g.conjugate(x, tau))?;
            values.push(a * b);
        }
        let psi = ClassFunction::new(&own, values)?;
        let label = linear_characters_labelled(&own)
            .into_iter()
            .find(|l| l.character == psi)
            .map(|l| l.label)
            .ok_or_else(|| Error::Falsification("double-coset character is not linear".into()))?;
        match terms
            .iter_mut()
            .find(|t| t.subgroup.members() == h_tau.members() && t.label == label)
        {
            Some(t) => t.multiplicity += 1,
            None => terms.push(MackeyTerm {
                subgroup: h_tau,
                label,
                psi,
                multiplicity: 1,
            }),
        }
    }
    Ok(MackeyDecomposition { terms, double_cosets })
}
