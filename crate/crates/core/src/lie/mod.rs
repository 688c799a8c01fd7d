//! Finite-dimensional Lie algebras, tensors over them and automorphisms.

mod algebra;
mod automorphism;
mod parse;
mod tensor;

pub use algebra::{h4, h4_algebra, BracketSpec, LieAlgebra, LieAlgebraSpec};
pub use automorphism::{Automorphism, Transformed};
pub use parse::{parse_lie_algebra, parse_lie_spec, write_lie_algebra};
pub use tensor::{adjoint_action, skew_part, Cocommutator, Tensor, Wedge2, Wedge3};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LieError {
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),
    #[error("bracket [{0}, {1}] is not antisymmetric")]
    NotAntisymmetric(usize, usize),
    #[error("basis index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("map does not preserve the bracket of basis elements {0} and {1}")]
    NotAutomorphism(usize, usize),
    #[error("linear map is not invertible")]
    NotInvertible,
    #[error("tensor is not antisymmetric")]
    NotAntisymmetricTensor,
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
