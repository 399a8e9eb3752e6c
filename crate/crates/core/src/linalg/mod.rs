//! Exact linear algebra over ℚ, ℤ and prime fields.

pub mod modp;
pub mod rational;
pub mod smith;
