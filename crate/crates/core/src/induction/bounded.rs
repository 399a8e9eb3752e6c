//! Bounded certificates: a square integer system between faithful monomial
//! characters and faithful irreducibles, inverted exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};
use serde::Serialize;

use super::certificate::{CertificateTerm, InductionCertificate};
use super::monomial::{MonomialCharacter, Workspace};
use crate::error::{Error, Result};
use crate::group::SubgroupFilter;
use crate::linalg::rational::{self, Row};

#[derive(Clone, Debug, Serialize)]
pub struct BoundedReport {
    pub d: usize,
    pub m: usize,
    /// `⟨φᵢ, χⱼ⟩` over the selected `φᵢ` and faithful `χⱼ`.
    pub matrix: Vec<Vec<u64>>,
    pub max_entry: u64,
    pub max_degree: u64,
    /// Largest `|aᵢ|` over all certificates, as text.
    pub max_coefficient: String,
    /// `log₁₀` of the largest coefficient and of `d^{3(d−1)/2}`.
    pub log10_max_coefficient: f64,
    pub log10_bound: f64,
    pub entries_within_sqrt_d: bool,
    pub degrees_within_half: bool,
    pub m_within_d: bool,
    pub coefficients_within_bound: bool,
}

impl BoundedReport {
    pub fn holds(&self) -> bool {
        self.entries_within_sqrt_d && self.degrees_within_half && self.m_within_d && self.coefficients_within_bound
    }
}

/// `|q| ≤ d^{3(d−1)/2}`, decided exactly as `|q|² ≤ d^{3(d−1)}`.
pub fn within_coefficient_bound(q: &BigRational, d: usize) -> bool {
    let lhs = q.numer().abs().pow(2u32);
    let rhs = BigInt::from(d).pow((3 * (d - 1)) as u32) * q.denom().pow(2u32);
    lhs <= rhs
}

fn log10_abs(q: &BigRational) -> f64 {
    if q.is_zero() {
        return f64::NEG_INFINITY;
    }
    let digits = |n: &BigInt| {
        let s = n.abs().to_string();
        let lead: f64 = s[..s.len().min(15)].parse().unwrap_or(1.0);
        lead.log10() + (s.len() - s.len().min(15)) as f64
    };
    digits(q.numer()) - digits(q.denom())
}

/// One certificate per faithful irreducible, built from `m` faithful
/// monomial characters of smallest degree that span.
pub fn bounded_certificate(ws: &Workspace) -> Result<(Vec<InductionCertificate>, BoundedReport)> {
    let g = ws.group();
    let d = g.order();
    if d < 2 {
        return Err(Error::Precondition("the trivial group has no faithful certificate".into()));
    }
    let t = ws.table();
    let faithful = t.faithful_indices();
    let m = faithful.len();
    if m == 0 {
        return Err(Error::Precondition("group has no faithful irreducible character".into()));
    }
    let mut candidates = ws.faithful_monomials()?;
    candidates.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.canonical_cmp(b)));

    let restrict = |mc: &MonomialCharacter| -> Row {
        faithful
            .iter()
            .map(|&j| BigRational::from_integer(BigInt::from(mc.multiplicities[j])))
            .collect()
    };
    let mut chosen: Vec<MonomialCharacter> = Vec::new();
    let mut rows: Vec<Row> = Vec::new();
    for c in candidates {
        if !c.constituents_within(&faithful) {
            return Err(Error::Falsification("faithful monomial with a non-faithful constituent".into()));
        }
        let mut trial = rows.clone();
        trial.push(restrict(&c));
        if rational::rank(&trial, m) == trial.len() {
            rows = trial;
            chosen.push(c);
            if rows.len() == m {
                break;
            }
        }
    }
    if rows.len() < m {
        return Err(Error::Falsification(format!(
            "faithful monomial characters span rank {} < {m}",
            rows.len()
        )));
    }
    let inv = rational::inverse(&rows).ok_or_else(|| Error::Falsification("selection matrix is singular".into()))?;

    // φ = A χ, so χⱼ = Σᵢ (A⁻¹)ⱼᵢ φᵢ.
    let normals = ws.minimal_normals().to_vec();
    let mut certs = Vec::with_capacity(m);
    let mut max_coefficient = BigRational::zero();
    let mut bounded = true;
    for (j, &chi_index) in faithful.iter().enumerate() {
        let terms: Vec<CertificateTerm> = chosen
            .iter()
            .zip(inv[j].iter())
            .filter(|(_, a)| !a.is_zero())
            .map(|(mc, a)| CertificateTerm {
                monomial: mc.clone(),
                coefficient: a.clone(),
            })
            .collect();
        for term in &terms {
            bounded &= within_coefficient_bound(&term.coefficient, d);
            if term.coefficient.abs() > max_coefficient {
                max_coefficient = term.coefficient.abs();
            }
        }
        let cert = InductionCertificate {
            target: t.get(chi_index).clone(),
            family: SubgroupFilter::Nilpotent,
            normals: normals.clone(),
            terms,
        };
        if !cert.verify() {
            return Err(Error::Falsification("bounded certificate failed re-verification".into()));
        }
        certs.push(cert);
    }

    let matrix: Vec<Vec<u64>> = chosen
        .iter()
        .map(|c| faithful.iter().map(|&j| c.multiplicities[j]).collect())
        .collect();
    let max_entry = matrix.iter().flatten().copied().max().unwrap_or(0);
    let max_degree = chosen.iter().map(|c| c.degree()).max().unwrap_or(0);
    let d64 = d as u64;
    let report = BoundedReport {
        d,
        m,
        entries_within_sqrt_d: max_entry * max_entry <= d64,
        degrees_within_half: 2 * max_degree <= d64,
        m_within_d: m <= d,
        coefficients_within_bound: bounded,
        log10_max_coefficient: log10_abs(&max_coefficient),
        log10_bound: 1.5 * (d as f64 - 1.0) * (d as f64).log10(),
        max_coefficient: max_coefficient.to_string(),
        matrix,
        max_entry,
        max_degree,
    };
    Ok((certs, report))
}
