//! Integer-relation detection via exact lattice reduction, and the numeric
//! derivation chain built on top of it.

mod finder;
mod lll;

pub use finder::{
    derive_alphabeta_extended, derive_alphabeta_numeric, derive_seeds_numeric,
    find_integer_relation, recover_qexact, DEFAULT_COEFF_BOUND,
};
pub use lll::{lll_reduce, IntVector, LatticeBasis};

use thiserror::Error;

use crate::cf_engine::CfError;
use crate::forms::FormsError;

/// Errors raised by lattice reduction and relation recovery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    /// The basis rows are linearly dependent.
    #[error("lattice basis rows are linearly dependent")]
    DependentRows,
    /// δ must lie in (1/4, 1).
    #[error("LLL delta must lie strictly between 1/4 and 1")]
    BadDelta,
    /// No validated relation within the coefficient bound.
    #[error("no integer relation found (insufficient precision or none exists)")]
    NoRelation,
    /// Underlying continued-fraction evaluation failed.
    #[error(transparent)]
    Cf(#[from] CfError),
    /// Underlying closed-form evaluation failed.
    #[error(transparent)]
    Forms(#[from] FormsError),
}
