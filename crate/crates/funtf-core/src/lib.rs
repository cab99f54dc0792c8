//! Combinatorial and numerical machinery for the algebraic completion of
//! partial matrices to finite unit norm tight frames (funtfs).
//!
//! An n x r real matrix W is a funtf matrix when `W W^T = (r/n) I` and every
//! column has unit norm. Given a pattern of known entries, this crate decides
//! whether the pattern is independent / spanning / a basis of the algebraic
//! matroid of the funtf variety, and counts the complex completions of
//! finite-to-one projections:
//!
//! * [`bigraph`] — bipartite graphs, 2-core peeling, cycle space, canonical
//!   forms and enumeration up to bipartite isomorphism,
//! * [`pattern`] — entry patterns, their text format, and the purely
//!   combinatorial necessary conditions,
//! * [`exactla`] — exact rational rank/kernel and SVD-based numeric rank,
//! * [`frames`] — the defining quadratic system, its Jacobian, and sampling
//!   of generic points on the variety,
//! * [`matroid`] — independent/spanning/basis classification,
//! * [`cores`] — enumeration and classification of the finitely many 2-cores,
//! * [`homotopy`] — total-degree homotopy continuation for fiber degrees,
//! * [`verify`] — the self-check suite behind `funtf verify`.

pub mod bigraph;
pub mod cores;
pub mod error;
pub mod exactla;
pub mod frames;
pub mod homotopy;
pub mod matroid;
pub mod pattern;
pub mod verify;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
