//! Explicit analytic bounds over ℚ and brute-force checks against them.

pub mod bounds;
pub mod dirichlet;
pub mod interval;
pub mod kernel;
pub mod primes;
pub mod scan;
pub mod sums;

pub use bounds::{c_epsilon, holder_params, rhs_bounds, BoundKind, BoundParams, HolderChoice};
pub use dirichlet::{char_sum, AcceptableMultFn, DirichletCharacter};
pub use interval::{Interval, LogValue};
pub use kernel::{eta, eta_hat, eta_hat_quadrature, eta_quadrature};
pub use primes::{frobenius_oracle, ExtensionKind};
pub use scan::{eps_bad_scan, pi_c, CharacterOracle, NoCancellationOracle, PrimeSumOracle, ScanReport};
pub use sums::{a0t_eval, bilinear_check, smoothed_sum_check, squarefull_sums, A0tData, A0tMode};
