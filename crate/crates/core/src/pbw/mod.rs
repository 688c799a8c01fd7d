//! Normal ordering in enveloping algebras presented by commutation
//! relations, with truncated series coefficients and tensor powers.

mod algebra;
mod element;
mod presets;
mod rewrite;
mod tensor;

pub use algebra::NcAlgebra;
pub use element::{Mono, PbwElement};
pub use presets::{
    classical_casimir, classical_h4, deformed_h4, deformed_h4_scaled, exp_of_generator,
    jordanian_coproduct, jordanian_coproduct_scaled, lie_to_pbw, osc, quantum_casimir,
    quantum_casimir_scaled, standard_coproduct, standard_h4, weyl, weyl_algebra, Coproduct,
};
pub use rewrite::{normal_form, Strategy};
pub use tensor::TensorElement;

use thiserror::Error;

use crate::math::MathError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PbwError {
    #[error(transparent)]
    Math(#[from] MathError),
    #[error("invalid relation: {0}")]
    BadRelation(String),
    #[error("generator index {0} out of range")]
    BadGenerator(usize),
    #[error("rewriting did not terminate within {0} steps")]
    FuelExhausted(usize),
}

#[cfg(test)]
mod tests;
