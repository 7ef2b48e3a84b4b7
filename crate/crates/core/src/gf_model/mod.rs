//! Expression front end: parsing, printing, and classification into supported shapes.

pub mod class;
pub mod classify;
pub mod expr;
pub mod parser;
pub mod rewrite;

pub use class::{GfClass, Sign};
pub use classify::{classify, classify_str};
pub use expr::Expr;
pub use parser::{parse_expression, parse_polynomial};
pub use rewrite::{rewrite_moebius_sqrt, rewrite_sum};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GfError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown identifier '{name}' at byte {offset}")]
    UnknownIdentifier { offset: usize, name: String },
    #[error("malformed rational exponent at byte {offset}")]
    MalformedExponent { offset: usize },
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl GfError {
    pub(crate) fn unsupported(msg: impl Into<String>) -> GfError {
        GfError::UnsupportedShape(msg.into())
    }
}
