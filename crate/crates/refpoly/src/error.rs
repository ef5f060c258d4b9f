//! Error type shared by all modules.

use thiserror::Error;

/// Errors surfaced by the library. `Clone` so results can live in memoized cells.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Input validation failed (bad element range, cyclic covers, empty point set, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An enumeration would exceed the configured size limit.
    #[error("size limit exceeded for {what}: required {required}, limit {limit}")]
    SizeLimit {
        what: &'static str,
        required: u128,
        limit: u128,
    },

    /// The monomial enumeration budget was exhausted.
    #[error("monomial budget exceeded: enumerated {enumerated}, budget {budget}")]
    MonomialBudget { enumerated: usize, budget: usize },

    /// Two polytopes were combined but live in different ambient dimensions.
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// Facet enumeration requires a full-dimensional polytope.
    #[error("polytope is not full-dimensional: affine dimension {affine}, ambient {ambient}")]
    NotFullDim { affine: usize, ambient: usize },

    /// Reflexivity is only defined when the origin is an interior point.
    #[error("origin is not an interior point (facet {facet:?} has right-hand side {rhs})")]
    OriginNotInterior { facet: Vec<i64>, rhs: i64 },

    /// A simplicial complex was required to be flag but has a larger minimal nonface.
    #[error("complex is not flag: minimal nonface {witness:?}")]
    FlagViolation { witness: Vec<usize> },

    /// The given subset is not an order ideal of the poset.
    #[error("subset {subset:?} is not an order ideal")]
    NotAnIdeal { subset: Vec<usize> },

    /// The given subset is not an antichain of the poset.
    #[error("subset {subset:?} is not an antichain")]
    NotAnAntichain { subset: Vec<usize> },

    /// `decompose` was asked about a point outside the dilated polytope.
    #[error("point {point:?} is not a member of {n} * Q")]
    NotMember { point: Vec<i64>, n: usize },

    /// A Gröbner certification was requested for an imperfect graph.
    #[error("graph is not perfect: {witness}")]
    NotPerfect { witness: String },

    /// `primitive_normalize` received the zero vector.
    #[error("cannot normalize the zero vector")]
    ZeroVector,

    /// Exact values did not fit the fixed-width storage used at the boundary.
    #[error("integer overflow while {0}")]
    Overflow(String),
}
