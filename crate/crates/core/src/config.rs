use serde::{Deserialize, Serialize};

/// Size limits for the brute-force parts of the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest group whose elements may be listed.
    pub elements: usize,
    /// Largest group whose subgroup lattice may be enumerated.
    pub subgroup_lattice: usize,
    /// Largest number of integers an analytic brute-force sum may visit.
    pub enumeration_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            elements: 10_000,
            subgroup_lattice: 2_000,
            enumeration_budget: 10_000_000,
        }
    }
}
