//! P-finite recurrences: extraction from ODEs and closed forms, transformations,
//! certification against the series oracle, and term generation.

pub mod certify;
pub mod closed_form;
pub mod convert;
pub mod generate;
pub mod pipeline;
pub mod recurrence;
pub mod transform;

pub use certify::{certify, required_terms, DEFAULT_GUARD};
pub use closed_form::{closed_form_ode, closed_form_recurrence};
pub use convert::ode_to_recurrence;
pub use generate::{generate_terms, lattice_terms, LatticeTerms};
pub use pipeline::{derive, oracle_terms, shorten_ode, Derivation, Interpretation, Options, Route};
pub use recurrence::{normalize_coeffs, proportional, InhomPRecurrence, Normalized, PRecurrence};
pub use transform::{homogenize, shorten, telescope, to_egf, to_lgf};

use crate::ode_derive::OdeError;
use crate::series_oracle::OracleError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecError {
    #[error(transparent)]
    Ode(#[from] OdeError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("all recurrence coefficients vanish")]
    ZeroRecurrence,
    #[error("the inhomogeneous part is identically zero; nothing to homogenize")]
    AlreadyHomogeneous,
    #[error("recurrences have spans {0} and {1}; shortening needs equal spans")]
    SpanMismatch(usize, usize),
    #[error("span {0} is already minimal")]
    AlreadyMinimal(usize),
    #[error("leading coefficients cancel the whole recurrence; no shortening possible")]
    NoShortening,
    #[error("no polynomial telescoper of degree at most {0}")]
    NoTelescoper(usize),
    #[error("transformation needs stride 1, recurrence has stride {0}")]
    NontrivialStride(u32),
    #[error("certification needs {needed} terms, got {got}")]
    NotEnoughTerms { needed: usize, got: usize },
    #[error("relation fails at n = {0}, beyond its theoretical range")]
    NotAnnihilated(usize),
    #[error("leading coefficient vanishes at n = {0}, which the initial terms do not cover")]
    SingularLeading(usize),
    #[error("recurrence carries no initial terms; certify it first")]
    Uncertified,
}
