use std::sync::Arc;

use super::class_function::ClassFunction;
use crate::cyclotomic::Cyclotomic;
use crate::group::{abelianization, Group, Subgroup};

/// A linear character labelled by its dual tuple `a` against the invariant
/// factors of `H/[H,H]`.
#[derive(Clone, Debug)]
pub struct LinearCharacter {
    pub label: Vec<u64>,
    pub character: ClassFunction,
}

/// All linear characters of `h`, in lexicographic order of their labels
/// (the trivial character first).
pub fn linear_characters_labelled(h: &Arc<Group>) -> Vec<LinearCharacter> {
    let ab = abelianization(&Subgroup::whole(h));
    let e = ab.exponent() as u32;
    ab.dual_tuples()
        .into_iter()
        .map(|a| {
            let character = ClassFunction::from_fn(h, |k| {
                let rep = h.classes()[k].representative;
                let exp = ab.character_exponent(&a, rep).expect("element of H");
                Cyclotomic::root_of_unity(e, exp as i64)
            });
            LinearCharacter { label: a, character }
        })
        .collect()
}

pub fn linear_characters(h: &Arc<Group>) -> Vec<ClassFunction> {
    linear_characters_labelled(h).into_iter().map(|l| l.character).collect()
}
