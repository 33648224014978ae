//! Shared error type for all layers of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A matrix or vector had incompatible dimensions.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A matrix does not define a homomorphism between the given groups.
    /// `row` and `col` locate the failing entry.
    #[error("not a homomorphism: entry ({row},{col}) {detail}")]
    NotAHomomorphism {
        row: usize,
        col: usize,
        detail: String,
    },

    /// Two morphisms cannot be composed (or added) because their endpoints
    /// do not match.
    #[error("not composable: {0}")]
    NotComposable(String),

    /// Objects passed to an operation do not match as required.
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),

    /// A stated precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A morphism does not factor as requested.
    #[error("no factorization: {0}")]
    DoesNotFactor(String),

    /// A diagram contains a non-identity cycle.
    #[error("diagram is cyclic")]
    CyclicDiagram,

    /// A name used in a diagram does not resolve.
    #[error("unknown reference: {0}")]
    UnknownReference(String),

    /// Malformed input that is not covered by a more specific variant.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The element-enumeration oracle cannot be applied, e.g. because a
    /// group is infinite or too large to enumerate.
    #[error("oracle inapplicable: {0}")]
    OracleInapplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
