//! Exact rational scalars, dense polynomials, and the falling-factorial basis.

pub mod falling;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod serde_support;

pub use falling::{falling_factorial, falling_to_power, power_to_falling, stirling2_table};
pub use linalg::nullspace;
pub use poly::{poly_gcd, poly_gcd_all, primitive_together, Poly};
pub use rational::{
    common_denominator, factorial, format_rational, int, parse_rational, rat, rational_pow,
    Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactMathError {
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
}
