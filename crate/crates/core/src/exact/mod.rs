//! Exact arithmetic over the rationals: scalars, dense matrices, linear
//! solving and permutation parity.

mod matrix;
mod perm;
mod rational;

pub use matrix::{nullspace, rank, solve_linear, DMatrix, Solution};
pub use perm::Permutation;
pub use rational::Rational;
