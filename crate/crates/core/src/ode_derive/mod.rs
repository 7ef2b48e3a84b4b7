//! Class-specific linear differential equations with polynomial coefficients.

pub mod alpha;
pub mod classes;
pub mod degenerate;
pub mod ode;

pub use alpha::{alpha_cross, exp_sqrt_alphas, nested_alphas, AlphaVector};
pub use classes::{derive_ode, first_order_parts};
pub use degenerate::{detect_degenerate, reroute_degenerate, Degeneracy};
pub use ode::{differentiate_ode, reduce_common_factor, LinearOde};

use crate::gf_model::GfError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OdeError {
    #[error(transparent)]
    Class(#[from] GfError),
    #[error("{0} has no differential equation of order at most two here")]
    NoOde(&'static str),
    #[error("degenerate nested root ({0:?}); reroute to the inverse-root form")]
    Degenerate(Degeneracy),
    #[error("cross product of the alpha vectors vanishes identically")]
    ZeroCrossProduct,
    #[error("expected an order-1 equation, found order {0}")]
    OrderNotOne(usize),
    #[error("the highest-order coefficient is identically zero")]
    ZeroLeading,
    #[error("cannot reroute: {0}")]
    Reroute(String),
}
