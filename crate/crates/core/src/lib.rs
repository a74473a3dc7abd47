//! Nilpotent-orbit combinatorics for the symplectic and orthogonal groups,
//! sphericity checking for subgroup actions on isotropic flag varieties, and
//! computation of restricted branching monoids.
//!
//! The crate is organized in layers:
//!
//! * [`partitions`] / [`orbits`]: partition combinatorics, parity collapse,
//!   Richardson orbits, the nil-equivalence poset on flag varieties;
//! * [`rootdata`] / [`chars`]: root systems, Weyl dimensions, Freudenthal
//!   weight multiplicities and formal-character arithmetic;
//! * [`embeddings`]: exact matrix realizations of the ambient algebras, the
//!   construction of embedded reductive subalgebras with aligned Borels, and
//!   the induced restriction map on weights;
//! * [`sphericity`] / [`branching`]: generic-point sphericity checks, rank
//!   formulas, restriction of irreducibles and extraction of the generators
//!   of restricted branching monoids;
//! * [`registry`]: the encoded case tables and the verification harness.
//!
//! All linear algebra is generic
//! over an exact [`scalar::Scalar`]; the two concrete choices are plain
//! rationals and the quadratic extension by sqrt(2).

pub mod branching;
pub mod chars;
pub mod embeddings;
pub mod error;
pub mod linalg;
pub mod orbits;
pub mod partitions;
pub mod registry;
pub mod rootdata;
pub mod scalar;
pub mod sphericity;

pub use error::{Error, Result};

/// Arbitrary-precision rational scalar.
pub type Rat = scalar::Rat;
/// Rationals extended by sqrt(2), needed for the explicit g2 matrices.
pub type RatSqrt2 = scalar::Sqrt2;
/// Default computation field: every construction in the registry embeds here.
pub type K = RatSqrt2;
