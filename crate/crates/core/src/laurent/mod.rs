//! Exact sparse multivariate Laurent polynomials over the integers.
//!
//! Every value of the cube recurrence lives here: `f(i,j,k)` is a
//! [`LaurentPoly`] in the initial variables `x(i,j,k)` and the edge
//! variables `a(j,k)`, `b(i,k)`, `c(i,j)`.

mod exponents;
mod json;
mod poly;
mod var;

pub use exponents::Exponents;
pub use json::exponents_to_map;
pub use poly::{LaurentPoly, Monomial};
pub use var::VarKey;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("{0} occurs with a negative exponent but no inverse was supplied")]
    MissingInverse(VarKey),
    #[error("supplied inverse for {0} is not a monomial inverse of the value")]
    InvalidInverse(VarKey),
    #[error("variable {0} has no assigned value")]
    UnassignedVariable(VarKey),
    #[error("variable {0} is zero but occurs with a negative exponent")]
    ZeroToNegativePower(VarKey),
    #[error("cannot parse variable key {0:?}")]
    BadVariable(String),
}
