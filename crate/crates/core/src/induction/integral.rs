use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::certificate::{CertificateTerm, InductionCertificate};
use super::monomial::Workspace;
use crate::chartab::ClassFunction;
use crate::error::{Error, Result};
use crate::group::SubgroupFilter;
use crate::linalg::smith::{reduce_height, solve_integer, IntMatrix};

/// Largest coefficient accepted in an integral certificate.
pub const HEIGHT_CAP: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub enum IntegralVerdict {
    Integral(InductionCertificate),
    /// The target is outside the ℤ-span of the faithful monomial characters.
    NoIntegralSolution,
    /// A solution exists, but none was found below the height cap.
    HeightExceeded(BigInt),
}

impl IntegralVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            IntegralVerdict::Integral(_) => "integral",
            IntegralVerdict::NoIntegralSolution => "no_integral_solution",
            IntegralVerdict::HeightExceeded(_) => "height_exceeded",
        }
    }
}

/// Integer combination of faithful monomial characters equal to the faithful
/// irreducible `chi`.
pub fn z_certificate_search(ws: &Workspace, chi: &ClassFunction) -> Result<IntegralVerdict> {
    let t = ws.table();
    let index = t
        .irreducibles()
        .iter()
        .position(|c| c == chi)
        .ok_or_else(|| Error::Precondition("target is not an irreducible character".into()))?;
    if !t.faithful_indices().contains(&index) {
        return Err(Error::Precondition("target is not faithful".into()));
    }
    let normals = ws.minimal_normals().to_vec();
    let candidates = ws.faithful_monomials()?;
    let k = t.len();
    let a: IntMatrix = (0..k)
        .map(|r| candidates.iter().map(|m| BigInt::from(m.multiplicities[r])).collect())
        .collect();
    let b: Vec<BigInt> = (0..k).map(|r| BigInt::from((r == index) as u8)).collect();
    let Some(sol) = solve_integer(&a, candidates.len(), &b) else {
        return Ok(IntegralVerdict::NoIntegralSolution);
    };
    let mut x = sol.particular;
    reduce_height(&mut x, &sol.kernel);
    let height = x.iter().map(|v| v.abs()).max().unwrap_or_default();
    if height > BigInt::from(HEIGHT_CAP) {
        return Ok(IntegralVerdict::HeightExceeded(height));
    }
    let cert = InductionCertificate {
        target: chi.clone(),
        family: SubgroupFilter::Nilpotent,
        normals,
        terms: candidates
            .iter()
            .zip(x)
            .filter(|(_, a)| a.sign() != num_bigint::Sign::NoSign)
            .map(|(m, a)| CertificateTerm {
                monomial: m.clone(),
                coefficient: BigRational::from_integer(a),
            })
            .collect(),
    };
    if !cert.verify() {
        return Err(Error::Falsification("integral certificate failed re-verification".into()));
    }
    Ok(IntegralVerdict::Integral(cert))
}
