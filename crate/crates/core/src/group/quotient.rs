//! Quotients `G/N` realised by the action on right cosets of `N`.

use std::sync::Arc;

use super::finite::Group;
use super::perm::Perm;
use super::schreier::PermGroup;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Quotient {
    group: Arc<Group>,
    kernel: Subgroup,
    coset_of: Vec<usize>,
    image: Vec<usize>,
}

impl Quotient {
    /// `G/N` as a permutation group of degree `[G:N]`.
    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// Index of the right coset `Nx` containing `x`.
    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    /// Image of a parent element in the quotient group.
    pub fn project(&self, x: usize) -> usize {
        self.image[x]
    }
}

fn action(g: &Group, coset_of: &[usize], reps: &[usize], x: usize) -> Perm {
    let images = reps.iter().map(|&r| coset_of[g.mul(r, x)] as u32).collect();
    Perm::from_images(images).expect("coset action is a permutation")
}

pub fn quotient_group(n: &Subgroup) -> Result<Quotient> {
    let g = n.parent();
    if !n.is_normal() {
        return Err(Error::Precondition("quotient requires a normal subgroup".into()));
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for &k in n.members() {
            coset_of[g.mul(k, x)] = reps.len();
        }
        reps.push(x);
    }
    let m = reps.len();
    let gens: Vec<Perm> = g
        .generator_indices()
        .iter()
        .map(|&s| action(g, &coset_of, &reps, s))
        .collect();
    let group = Group::new(PermGroup::new(m, gens)?, g.limits())?;
    let image = (0..g.order())
        .map(|x| {
            let p = action(g, &coset_of, &reps, reps[coset_of[x]]);
            group.index_of(&p).expect("image lies in the quotient")
        })
        .collect();
    Ok(Quotient {
        group,
        kernel: n.clone(),
        coset_of,
        image,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Limits;
    use crate::group::abelian::abelianization;
    use crate::group::families::group_from_spec;
    use crate::group::structure::{center, fitting};

    #[test]
    fn documented_quotients() {
        let s4 = group_from_spec("Sym(4)", Limits::default()).unwrap();
        let q = quotient_group(&fitting(&s4)).unwrap();
        assert_eq!(q.group().order(), 6);
        assert!(!q.group().is_abelian());

        let q8 = group_from_spec("Q8", Limits::default()).unwrap();
        let q = quotient_group(&center(&q8)).unwrap();
        assert_eq!(q.group().order(), 4);
        assert_eq!(abelianization(&Subgroup::whole(q.group())).factors(), &[2, 2]);

        let q = quotient_group(&Subgroup::trivial(&q8)).unwrap();
        assert_eq!(q.group().order(), 8);
    }

    #[test]
    fn projection_is_a_surjective_homomorphism_with_kernel_n() {
        let g = group_from_spec("SL23", Limits::default()).unwrap();
        let q = quotient_group(&center(&g)).unwrap();
        let mut hit = vec![false; q.group().order()];
        for x in 0..g.order() {
            hit[q.project(x)] = true;
            assert_eq!(q.project(x) == 0, q.kernel().contains(x));
            for y in 0..g.order() {
                assert_eq!(q.project(g.mul(x, y)), q.group().mul(q.project(x), q.project(y)));
            }
        }
        assert!(hit.iter().all(|&h| h));
    }

    #[test]
    fn non_normal_subgroups_are_rejected() {
        let s3 = group_from_spec("Sym(3)", Limits::default()).unwrap();
        let t = Subgroup::from_perms(&s3, &[Perm::parse("(1 2)", Some(3)).unwrap()]).unwrap();
        assert!(matches!(quotient_group(&t), Err(Error::Precondition(_))));
    }
}
