//! Independent ground truth: direct truncated power-series expansion of every class.

pub mod oracle;
pub mod series;

pub use oracle::{expand_expr, oracle_expand};
pub use series::{
    poly_pow_series, series_div, series_exp, series_log, series_pow, series_pow_general,
    TruncatedSeries,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("constant term must be 1, found {0}")]
    NonUnitConstant(String),
    #[error("constant term must be 0, found {0}")]
    NonzeroConstant(String),
    #[error("irrational constant term {0}")]
    IrrationalConstant(String),
    #[error("division by a series that vanishes to the known order")]
    DivisionByZeroSeries,
    #[error("the function has a pole at x = 0")]
    Pole,
    #[error("truncation order exhausted")]
    PrecisionExhausted,
    #[error("precondition violated: {0}")]
    Precondition(String),
}
