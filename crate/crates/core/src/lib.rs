//! Exact linear algebra for modules over finite-dimensional algebras that need
//! not be commutative or associative.
//!
//! Everything runs over the rationals with arbitrary precision, so every law
//! checked by [`verify`] is a strict equality.
//!
//! - [`exact`]: rationals, rational matrices, linear solving, permutation parity.
//! - [`algebra`]: algebras given by structural constants and their elements.
//! - [`biring`]: matrices over any [`biring::Ring`] with rc/cr products.
//! - [`amodule`]: left/right modules of columns/rows, bases and coordinates.
//! - [`hom`]: module homomorphisms as matrices.
//! - [`tensorcalc`]: the `a ⊗ b` action, noncommutative polynomials and their
//!   derivatives.
//! - [`verify`]: seeded property suites.

pub mod algebra;
pub mod amodule;
pub mod biring;
pub mod cli;
pub mod error;
pub mod exact;
pub mod hom;
pub mod tensorcalc;
pub mod verify;

pub use algebra::{AlgElem, Algebra};
pub use error::{Error, Result};
pub use exact::{DMatrix, Permutation, Rational};
