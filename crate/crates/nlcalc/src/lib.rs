//! Exact-arithmetic verification of the Griffiths-Harris codimension bound
//! for Noether-Lefschetz loci attached to line arrangements in projective
//! 3-space.
//!
//! The crate computes, with no floating point anywhere:
//!
//! * graded pieces of the homogeneous ideal of a line arrangement, via exact
//!   or certified modular rank of restriction matrices (`ideal`);
//! * Hilbert functions, Hilbert polynomials, and the cohomological defect
//!   that controls semiregularity (`ideal`);
//! * configuration-family dimensions, from closed forms or from the tangent
//!   space at a witness arrangement (`geometry`);
//! * the resulting Noether-Lefschetz codimensions, compared against the
//!   Griffiths-Harris bound with an equality/strict/violation verdict (`nl`).
//!
//! The `cli` module exposes the same calculus as the `nlcalc` binary.

pub mod cli;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod ideal;
pub mod nl;

pub use error::{Error, Result};
