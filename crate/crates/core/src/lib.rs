//! Exact certification of vanishing-theorem hypotheses for Laurent polynomial
//! systems on algebraic tori.
//!
//! Everything here is exact: lattice geometry over arbitrary-precision
//! integers, parameters over Gaussian rationals, and elimination over
//! exact univariate/bivariate polynomial rings. There is no floating point
//! anywhere; every verdict is backed by a certificate or is surfaced as
//! `Undecided` rather than guessed.

pub mod arith;
pub mod bivariate;
pub mod laurent;
pub mod linalg;
pub mod nondegeneracy;
pub mod nonresonance;
pub mod polytope;
pub mod spectrum;
pub mod theorems;
pub mod upoly;
pub mod volume;

pub use arith::{GaussRat, Int, IntVec, Rat};
pub use polytope::LatticePolytope;
