//! Shared inputs for the benchmark suite.

use std::sync::Arc;

use artin_core::group::families::group_from_spec;
use artin_core::{Group, Limits};

/// Groups used across benchmarks, by spec string.
pub const GROUPS: &[&str] = &["Sym(4)", "SL23", "Sym(5)", "Q8 x Cyc(3)"];

pub fn group(spec: &str) -> Arc<Group> {
    group_from_spec(spec, Limits::default()).expect("benchmark group spec")
}
