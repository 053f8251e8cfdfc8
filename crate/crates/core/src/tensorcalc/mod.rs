//! Tensor action of `A ⊗ A` on `A`, noncommutative polynomials and their
//! derivatives.

mod diff;
mod poly;
mod tensor;

pub use diff::{differentiate, eval_dual, jacobian, jacobian_apply, Dual, TensorPoly, TensorPolyTerm};
pub use poly::{parse_map, parse_ncpoly, NCPoly, Word};
pub use tensor::{Tensor, TensorTerm};
