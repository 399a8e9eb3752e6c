//! Rational induction certificates from monomial characters, the spaces
//! they span, and the identities used to bound them.

mod certificate;
mod indicator;
mod integral;
mod bounded;
mod mackey;
mod monomial;

pub use certificate::{
    certificate_solve, subgroup_export, verify_spaces, CertificateExport, CertificateTerm, CharacterExport, ClassRef,
    GroupExport, InductionCertificate, SpaceReport, SubgroupExport, TermExport, CERTIFICATE_SCHEMA,
};
pub use indicator::{class_indicator_decomposition, IndicatorDecomposition, IndicatorReport, L1_SLACK};
pub use integral::{z_certificate_search, IntegralVerdict, HEIGHT_CAP};
pub use bounded::{bounded_certificate, within_coefficient_bound, BoundedReport};
pub use mackey::{mackey_decompose, MackeyDecomposition, MackeyReport, MackeyTerm};
pub use monomial::{MonomialCharacter, Workspace};
