//! Permutation groups, their elements, subgroups, and structural queries.

pub mod abelian;
pub mod bitset;
pub mod families;
pub mod finite;
pub mod lattice;
pub mod perm;
pub mod quotient;
pub mod schreier;
pub mod structure;
pub mod subgroup;

pub use abelian::{abelianization, AbelianInvariants};
pub use bitset::BitSet;
pub use finite::{ConjugacyClass, Group};
pub use lattice::{subgroups_up_to_conjugacy, SubgroupFilter};
pub use perm::Perm;
pub use quotient::{quotient_group, Quotient};
pub use schreier::PermGroup;
pub use structure::{structure_query, StructureQuery};
pub use subgroup::{Embedding, Subgroup};
