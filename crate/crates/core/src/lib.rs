//! Exact derivation of P-finite recurrences for algebraic, exponential, logarithmic
//! and hypergeometric generating functions.
//!
//! A generating function is parsed and classified into a [`GfClass`], which yields
//! a linear ODE with polynomial coefficients. The ODE is turned into a recurrence,
//! certified against a truncated-series oracle, and used to generate terms.
//!
//! ```
//! use holorec::{classify_str, derive, generate_terms, Options};
//!
//! let class = classify_str("1/sqrt(1-4*x)").unwrap();
//! let d = derive(&class, &Options::default()).unwrap();
//! let terms = generate_terms(&d.recurrence, 5).unwrap();
//! assert_eq!(terms.iter().map(|t| t.to_string()).collect::<Vec<_>>(), ["1", "2", "6", "20", "70", "252"]);
//! ```

pub mod cli_harness;
pub mod exactmath;
pub mod gf_model;
pub mod ode_derive;
pub mod rec_engine;
pub mod series_oracle;

pub use cli_harness::{BFile, BFileError, Fixture, Report, Verdict};
pub use exactmath::{Poly, Rational};
pub use gf_model::{classify, classify_str, parse_expression, parse_polynomial, Expr, GfClass, GfError, Sign};
pub use ode_derive::{derive_ode, LinearOde, OdeError};
pub use rec_engine::{
    derive, generate_terms, Derivation, InhomPRecurrence, Interpretation, Options, PRecurrence, RecError,
    Route,
};
pub use series_oracle::{oracle_expand, OracleError, TruncatedSeries};

/// Any failure along the expression-to-terms pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] GfError),
    #[error(transparent)]
    Ode(#[from] OdeError),
    #[error(transparent)]
    Recurrence(#[from] RecError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    BFile(#[from] BFileError),
}
