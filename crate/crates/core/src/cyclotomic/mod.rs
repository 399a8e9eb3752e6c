//! Exact arithmetic in cyclotomic fields.

mod basis;
mod enclosure;
mod field;

pub use basis::euler_phi;
pub use enclosure::{sqrt_upper, ComplexEnclosure, RealEnclosure};
pub use field::Cyclotomic;
