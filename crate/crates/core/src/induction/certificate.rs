use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::monomial::{MonomialCharacter, Workspace};
use crate::chartab::ClassFunction;
use crate::error::{Error, Result};
use crate::group::{Subgroup, SubgroupFilter};
use crate::linalg::rational::{self, Row};

/// Schema tag embedded in exported certificates.
pub const CERTIFICATE_SCHEMA: &str = "artin-induction-certificate/1";

#[derive(Clone, Debug)]
pub struct CertificateTerm {
    pub monomial: MonomialCharacter,
    pub coefficient: BigRational,
}

/// `target = Σ aᵢ · Ind_{Hᵢ}^G ψᵢ` with every `(Hᵢ, ψᵢ)` in the family and
/// meeting the kernel condition for each constraint subgroup.
#[derive(Clone, Debug)]
pub struct InductionCertificate {
    pub target: ClassFunction,
    pub family: SubgroupFilter,
    pub normals: Vec<Subgroup>,
    pub terms: Vec<CertificateTerm>,
}

impl InductionCertificate {
    /// Pointwise exact re-verification, independent of how the coefficients
    /// were found.
    pub fn verify(&self) -> bool {
        let g = self.target.group();
        let mut acc = ClassFunction::zero(g);
        for t in &self.terms {
            let m = &t.monomial;
            if !self.family.accepts(&m.subgroup) || !m.avoids(&self.normals) {
                return false;
            }
            let induced = match ClassFunction::induce(&m.subgroup, &m.psi) {
                Ok(f) => f,
                Err(_) => return false,
            };
            acc = acc.add(&induced.scale(&t.coefficient)).expect("same group");
        }
        acc == self.target
    }

    /// Largest `|aᵢ|`.
    pub fn height(&self) -> BigRational {
        self.terms
            .iter()
            .map(|t| num_traits::Signed::abs(&t.coefficient))
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn export(&self, spec: &str) -> CertificateExport {
        let g = self.target.group();
        CertificateExport {
            schema: CERTIFICATE_SCHEMA.to_string(),
            group: GroupExport {
                spec: spec.to_string(),
                degree: g.degree(),
                order: g.order(),
                generators: g.perm_group().generators().iter().map(|p| p.to_string()).collect(),
                classes: g
                    .classes()
                    .iter()
                    .map(|c| ClassRef {
                        representative: g.element(c.representative).to_string(),
                        size: c.size,
                    })
                    .collect(),
            },
            family: self.family.name().to_string(),
            normals: self.normals.iter().map(subgroup_export).collect(),
            target: self.target.to_text(),
            terms: self
                .terms
                .iter()
                .map(|t| {
                    let own = t.monomial.psi.group();
                    TermExport {
                        subgroup: subgroup_export(&t.monomial.subgroup),
                        character: CharacterExport {
                            classes: own
                                .classes()
                                .iter()
                                .map(|c| ClassRef {
                                    representative: own.element(c.representative).to_string(),
                                    size: c.size,
                                })
                                .collect(),
                            values: t.monomial.psi.to_text(),
                        },
                        induced: t.monomial.induced.to_text(),
                        coefficient: t.coefficient.to_string(),
                    }
                })
                .collect(),
            verified: self.verify(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateExport {
    pub schema: String,
    pub group: GroupExport,
    pub family: String,
    pub normals: Vec<SubgroupExport>,
    pub target: Vec<String>,
    pub terms: Vec<TermExport>,
    pub verified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupExport {
    pub spec: String,
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
    pub classes: Vec<ClassRef>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRef {
    pub representative: String,
    pub size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupExport {
    pub order: usize,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterExport {
    pub classes: Vec<ClassRef>,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TermExport {
    pub subgroup: SubgroupExport,
    pub character: CharacterExport,
    pub induced: Vec<String>,
    pub coefficient: String,
}

pub fn subgroup_export(h: &Subgroup) -> SubgroupExport {
    SubgroupExport {
        order: h.order(),
        generators: h.generator_perms().iter().map(|p| p.to_string()).collect(),
    }
}

fn column(m: &MonomialCharacter) -> Row {
    m.multiplicities
        .iter()
        .map(|&x| BigRational::from_integer(BigInt::from(x)))
        .collect()
}

/// Matrix whose columns are the given vectors.
pub(crate) fn columns_to_matrix(cols: &[Row], rows: usize) -> Vec<Row> {
    (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

/// Sparse solution of `Σ aᵢ colᵢ = target`: columns are taken in order of
/// support size, then total multiplicity, then canonical order, and kept when
/// independent, until the target lies in their span.
fn sparse_solve(candidates: &[MonomialCharacter], target: &Row) -> Option<Vec<(usize, BigRational)>> {
    let k = target.len();
    if target.iter().all(|x| x.is_zero()) {
        return Some(Vec::new());
    }
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by(|&a, &b| {
        candidates[a]
            .support_size()
            .cmp(&candidates[b].support_size())
            .then_with(|| {
                let total = |m: &MonomialCharacter| m.multiplicities.iter().sum::<u64>();
                total(&candidates[a]).cmp(&total(&candidates[b]))
            })
            .then_with(|| candidates[a].canonical_cmp(&candidates[b]))
    });
    let mut chosen: Vec<usize> = Vec::new();
    let mut cols: Vec<Row> = Vec::new();
    for idx in order {
        let col = column(&candidates[idx]);
        let mut trial = cols.clone();
        trial.push(col);
        let m = columns_to_matrix(&trial, k);
        if rational::rank(&m, trial.len()) < trial.len() {
            continue;
        }
        cols = trial;
        chosen.push(idx);
        if let Some(x) = rational::solve(&m, cols.len(), target) {
            return Some(
                chosen
                    .into_iter()
                    .zip(x)
                    .filter(|(_, a)| !a.is_zero())
                    .collect(),
            );
        }
        if cols.len() == k {
            break;
        }
    }
    None
}

/// Multiplicity vector of a class function against the table, if it lies in
/// the rational span of the irreducibles.
fn coordinates(ws: &Workspace, f: &ClassFunction) -> Result<Row> {
    let t = ws.table();
    let mut out = vec![BigRational::zero(); t.len()];
    for (i, m) in t.decompose(f)? {
        out[i] = m
            .to_rational()
            .ok_or_else(|| Error::Precondition("target is not a rational combination of irreducibles".into()))?;
    }
    Ok(out)
}

/// Solves for an induction certificate of `chi` over the family with kernel
/// constraints `normals`.
pub fn certificate_solve(
    ws: &Workspace,
    chi: &ClassFunction,
    family: SubgroupFilter,
    normals: &[Subgroup],
) -> Result<InductionCertificate> {
    let allowed = ws.table().avoiding(normals);
    let target = coordinates(ws, chi)?;
    if target.iter().enumerate().any(|(i, x)| !x.is_zero() && !allowed.contains(&i)) {
        return Err(Error::Precondition(
            "target has a constituent whose kernel contains a constraint subgroup".into(),
        ));
    }
    let candidates = ws.qualifying(family, normals)?;
    let solution = sparse_solve(&candidates, &target).ok_or_else(|| {
        Error::Falsification(format!(
            "no {} induction certificate: target lies outside the span of {} qualifying monomials",
            family.name(),
            candidates.len()
        ))
    })?;
    let cert = InductionCertificate {
        target: chi.clone(),
        family,
        normals: normals.to_vec(),
        terms: solution
            .into_iter()
            .map(|(i, a)| CertificateTerm {
                monomial: candidates[i].clone(),
                coefficient: a,
            })
            .collect(),
    };
    if !cert.verify() {
        return Err(Error::Falsification("solved certificate failed pointwise re-verification".into()));
    }
    Ok(cert)
}

/// Ranks of `R(G; 𝒩)` and `I(G; 𝒩)` with the consistency checks.
#[derive(Clone, Debug, Serialize)]
pub struct SpaceReport {
    pub family: String,
    pub constraint_orders: Vec<usize>,
    /// Irreducibles spanning `R(G; 𝒩)`.
    pub r_basis: Vec<usize>,
    pub r_dim: usize,
    pub i_generators: usize,
    pub i_rank: usize,
    /// Every generator of `I` lies in `R`.
    pub i_within_r: bool,
    /// Every basis element of `R` has vanishing pushforward to each `G/Nᵢ`.
    pub pushforward_vanishes: bool,
    /// With a single constraint `N`: every class function orthogonal to `I`
    /// is constant on cosets of `N` exactly when the spaces agree.
    pub dual_check: Option<bool>,
    pub equal: bool,
}

pub fn verify_spaces(ws: &Workspace, normals: &[Subgroup], family: SubgroupFilter) -> Result<SpaceReport> {
    let t = ws.table();
    let g = ws.group();
    let r_basis = t.avoiding(normals);
    let gens = ws.qualifying(family, normals)?;
    let cols: Vec<Row> = gens.iter().map(column).collect();
    let k = t.len();
    let i_rank = if cols.is_empty() {
        0
    } else {
        rational::rank(&columns_to_matrix(&cols, k), cols.len())
    };
    let i_within_r = gens.iter().all(|m| m.constituents_within(&r_basis));

    let mut pushforward_vanishes = true;
    for &i in &r_basis {
        for n in normals {
            if !t.get(i).pushforward_average(n)?.is_zero() {
                pushforward_vanishes = false;
            }
        }
    }
    for i in (0..k).filter(|i| !r_basis.contains(i)) {
        // Irreducibles outside R must fail the vanishing condition.
        let mut all_vanish = true;
        for n in normals {
            if !t.get(i).pushforward_average(n)?.is_zero() {
                all_vanish = false;
            }
        }
        if all_vanish {
            pushforward_vanishes = false;
        }
    }

    let dual_check = if normals.len() == 1 {
        let n = &normals[0];
        // Rows: generators' multiplicity vectors. I^⊥ in irreducible
        // coordinates is their rational null space.
        let rows: Vec<Row> = cols.clone();
        let perp = if rows.is_empty() {
            (0..k)
                .map(|i| (0..k).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
                .collect()
        } else {
            rational::nullspace(&rows, k)
        };
        let constant = perp.iter().all(|c| {
            let coeffs: Vec<(usize, BigRational)> = c.iter().cloned().enumerate().collect();
            let f = t.combination(&coeffs);
            g.classes().iter().all(|cl| {
                let x = cl.representative;
                n.members().iter().all(|&m| f.at(g.mul(x, m)) == f.at(x))
            })
        });
        Some(constant == (i_rank == r_basis.len()))
    } else {
        None
    };

    Ok(SpaceReport {
        family: family.name().to_string(),
        constraint_orders: normals.iter().map(|n| n.order()).collect(),
        r_dim: r_basis.len(),
        r_basis,
        i_generators: gens.len(),
        i_rank,
        i_within_r,
        pushforward_vanishes,
        dual_check,
        equal: i_rank == t.avoiding(normals).len(),
    })
}
