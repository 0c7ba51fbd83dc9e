//! Exact coefficient arithmetic.

pub mod expr;
pub mod gcd;
pub mod laurent;
pub mod linsolve;
pub mod numeric;
pub mod qcomb;
pub mod render;
pub mod scalar;

use thiserror::Error;

pub use expr::{parse_scalar, ParseError};
pub use laurent::{Exp, LaurentPoly};
pub use linsolve::{rank, solve_linear, LinSolve};
pub use numeric::{specialize, ExactParam, NumericParams};
pub use qcomb::{q_binomial, q_factorial, q_int};
pub use scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator {denominator} vanishes")]
    Pole { denominator: String },
    #[error("{0}")]
    Domain(String),
}
