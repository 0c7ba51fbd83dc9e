//! Degenerate principal series `pi_{a,b}` on the localized quantum matrix
//! algebra, their isotypic structure, intertwiners and classification.

mod action;
mod classify;
mod intertwiner;
mod isotypic;

use thiserror::Error;

use crate::qmatrix::MatrixError;
use crate::scalars::ScalarError;
use crate::uqaction::ActionError;

pub use action::{BoundaryVector, KVector, PrincipalSeries, RepParams};
pub use classify::{
    canonicalize, central_scalar, central_scalar_at, classify, partner_exponents, submodule_invariance_check,
    Bound, CaseLabel, CaseReport, Canonical, InvarianceViolation, ParamPair, Submodule, Unitarity,
};
pub use intertwiner::{intertwiner_coeff, verify_intertwiner, IntertwinerViolation};
pub use isotypic::window;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum SeriesError {
    #[error("k must be nonincreasing: {0:?}")]
    NotMonotone(Vec<i64>),
    #[error("k has {got} entries, expected {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("vector is not spanned by the candidate components in degree {degree}")]
    Residual { degree: usize },
    #[error("not a Harish-Chandra module: {0}")]
    NotHarishChandra(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
