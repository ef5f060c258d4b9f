//! Exact-arithmetic toolkit for lattice polytopes built from posets and graphs.
//!
//! The library constructs the order polytope `O_P` and chain polytope `C_P` of a
//! finite poset, the stable set polytope `Q_G` of a simple graph, and the polytope
//! `P_Δ` of a simplicial complex, then glues them into two signed constructions:
//!
//! * `Γ(A, B) = conv(A ∪ -B)` in dimension `d`, and
//! * `Ω(A, B) = conv((A × {1}) ∪ (-B × {-1}))` in dimension `d + 1`.
//!
//! On top of these it decides reflexivity (via exact facet enumeration), the
//! integer decomposition property (with undecomposable witness points), Ehrhart
//! δ-polynomials, perfect-graph recognition (odd holes / odd antiholes), and
//! degree-truncated Gröbner-basis certification of the associated toric ideals.
//!
//! Everything is computed over arbitrary-precision integers and rationals; there
//! is no floating point anywhere in the decision paths.

pub mod cli;
pub mod combinatorics;
pub mod ehrhart;
pub mod error;
pub mod exact;
pub mod limits;
pub mod polytope;
pub mod toric;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
