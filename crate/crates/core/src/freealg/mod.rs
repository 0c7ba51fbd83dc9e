//! Finitely presented quadratic algebras with PBW rewriting.

mod element;
mod localize;
mod presentation;
mod text;

use thiserror::Error;

use crate::scalars::ParseError;

pub use element::{AlgebraElement, Terms};
pub use localize::{LocalElement, Localization};
pub use presentation::{confluence_check, deglex, graded_dimension, Gen, Overlap, Presentation, Relation, Rule, Word};
pub use text::eval_element;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("relation {index} is not quadratic in its leading word")]
    NotQuadratic { index: usize },
    #[error("relation {index} has leading word {word} which is already ordered")]
    NotOrientable { index: usize, word: String },
    #[error("two rules rewrite {0}")]
    DuplicateRule(String),
    #[error("no rule for out-of-order pair {0}")]
    MissingRule(String),
    #[error("rule for {lhs} has right-hand word {rhs} that is not smaller")]
    NonTerminating { lhs: String, rhs: String },
    #[error("elements belong to different presentations")]
    PresentationMismatch,
    #[error("element {0} is not central")]
    NotCentral(String),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Other(String),
}
