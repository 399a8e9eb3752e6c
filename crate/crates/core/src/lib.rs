//! Exact character theory for finite permutation groups: character tables,
//! induced characters and rational induction certificates, together with
//! explicit analytic bounds for abelian extensions of ℚ.

pub mod analytic;
pub mod catalog;
pub mod chartab;
pub mod config;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod induction;
pub mod linalg;
pub mod suite;

pub use chartab::{character_table, CharacterTable, ClassFunction};
pub use config::Limits;
pub use cyclotomic::{ComplexEnclosure, Cyclotomic, RealEnclosure};
pub use error::{Error, Result};
pub use group::{Group, Perm, PermGroup, Subgroup, SubgroupFilter};
pub use induction::{certificate_solve, verify_spaces, InductionCertificate, MonomialCharacter, Workspace};
