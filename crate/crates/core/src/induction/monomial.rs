use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::chartab::{character_table, linear_characters_labelled, CharacterTable, ClassFunction};
use crate::error::{Error, Result};
use crate::group::structure::minimal_normals;
use crate::group::{subgroups_up_to_conjugacy, BitSet, Group, Subgroup, SubgroupFilter};

/// `Ind_H^G ψ` for a linear character `ψ` of `H`.
#[derive(Clone, Debug)]
pub struct MonomialCharacter {
    pub subgroup: Subgroup,
    /// Dual tuple of `ψ` against the invariant factors of `H/[H,H]`.
    pub label: Vec<u64>,
    /// `ψ` on the subgroup's own enumeration.
    pub psi: ClassFunction,
    pub induced: ClassFunction,
    /// `⟨Ind ψ, χᵢ⟩` for each irreducible `χᵢ` of the parent.
    pub multiplicities: Vec<u64>,
    /// Parent indices `x ∈ H` with `ψ(x) = 1`.
    kernel: Arc<BitSet>,
}

impl MonomialCharacter {
    pub fn new(subgroup: &Subgroup, label: Vec<u64>, psi: ClassFunction, table: &CharacterTable) -> Result<MonomialCharacter> {
        let induced = ClassFunction::induce(subgroup, &psi)?;
        let multiplicities = table
            .character_multiplicities(&induced)?
            .ok_or_else(|| Error::Falsification("induced linear character is not a character".into()))?;
        let mut dense = vec![0u64; table.len()];
        for (i, m) in multiplicities {
            dense[i] = m;
        }
        let emb = subgroup.embedding()?;
        let one = crate::Cyclotomic::one();
        let mut kernel = BitSet::new(subgroup.parent().order());
        for (i, &x) in emb.to_parent.iter().enumerate() {
            if psi.at(i) == &one {
                kernel.insert(x);
            }
        }
        Ok(MonomialCharacter {
            subgroup: subgroup.clone(),
            label,
            psi,
            induced,
            multiplicities: dense,
            kernel: Arc::new(kernel),
        })
    }

    /// `ker ψ` as parent indices.
    pub fn psi_kernel(&self) -> &BitSet {
        &self.kernel
    }

    /// `H ∩ N ⊄ ker ψ` for every `N`.
    pub fn avoids(&self, normals: &[Subgroup]) -> bool {
        normals.iter().all(|n| {
            n.members()
                .iter()
                .any(|&x| self.subgroup.contains(x) && !self.kernel.contains(x))
        })
    }

    /// Every irreducible constituent lies in `allowed`.
    pub fn constituents_within(&self, allowed: &[usize]) -> bool {
        self.multiplicities
            .iter()
            .enumerate()
            .all(|(i, &m)| m == 0 || allowed.contains(&i))
    }

    /// Canonical order: subgroup order, subgroup members, then label.
    pub fn canonical_cmp(&self, other: &MonomialCharacter) -> std::cmp::Ordering {
        self.subgroup
            .order()
            .cmp(&other.subgroup.order())
            .then_with(|| self.subgroup.members().cmp(other.subgroup.members()))
            .then_with(|| self.label.cmp(&other.label))
    }

    pub fn support_size(&self) -> usize {
        self.multiplicities.iter().filter(|&&m| m != 0).count()
    }

    pub fn degree(&self) -> u64 {
        (self.subgroup.index()) as u64
    }
}

/// A group with its character table, minimal normal subgroups, and cached
/// monomial characters per subgroup family.
pub struct Workspace {
    group: Arc<Group>,
    table: CharacterTable,
    minimal_normals: Vec<Subgroup>,
    monomials: Mutex<HashMap<SubgroupFilter, Arc<Vec<MonomialCharacter>>>>,
}

impl Workspace {
    pub fn new(group: &Arc<Group>) -> Result<Workspace> {
        group.ensure_table();
        Ok(Workspace {
            group: group.clone(),
            table: character_table(group)?,
            minimal_normals: minimal_normals(group),
            monomials: Mutex::new(HashMap::new()),
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn minimal_normals(&self) -> &[Subgroup] {
        &self.minimal_normals
    }

    /// Every `Ind_H^G ψ` with `H` in the family (up to conjugacy) and `ψ`
    /// linear, in canonical order.
    pub fn monomials(&self, family: SubgroupFilter) -> Result<Arc<Vec<MonomialCharacter>>> {
        if let Some(m) = self.monomials.lock().unwrap().get(&family) {
            return Ok(m.clone());
        }
        let mut out = Vec::new();
        for h in subgroups_up_to_conjugacy(&self.group, family)? {
            let own = h.embedding()?.group.clone();
            for lin in linear_characters_labelled(&own) {
                out.push(MonomialCharacter::new(&h, lin.label, lin.character, &self.table)?);
            }
        }
        out.sort_by(|a, b| a.canonical_cmp(b));
        let out = Arc::new(out);
        self.monomials.lock().unwrap().insert(family, out.clone());
        Ok(out)
    }

    /// Monomials of the family meeting the kernel condition for `normals`,
    /// deduplicated by induced character (first in canonical order kept).
    pub fn qualifying(&self, family: SubgroupFilter, normals: &[Subgroup]) -> Result<Vec<MonomialCharacter>> {
        let all = self.monomials(family)?;
        let mut seen = std::collections::HashSet::new();
        Ok(all
            .iter()
            .filter(|m| m.avoids(normals))
            .filter(|m| seen.insert(m.multiplicities.clone()))
            .cloned()
            .collect())
    }

    /// Faithful monomial characters: nilpotent `H`, every constituent
    /// faithful, one per distinct induced character.
    pub fn faithful_monomials(&self) -> Result<Vec<MonomialCharacter>> {
        let normals = self.minimal_normals.clone();
        self.qualifying(SubgroupFilter::Nilpotent, &normals)
    }

    /// For every nilpotent `(H, ψ)`: whether the kernel condition against
    /// the minimal normal subgroups agrees with every constituent being
    /// faithful. Returns `(pairs checked, disagreements)`.
    pub fn kernel_filter_agreement(&self) -> Result<(usize, usize)> {
        let faithful = self.table.faithful_indices();
        let all = self.monomials(SubgroupFilter::Nilpotent)?;
        let disagreements = all
            .iter()
            .filter(|m| m.avoids(&self.minimal_normals) != m.constituents_within(&faithful))
            .count();
        Ok((all.len(), disagreements))
    }
}
