//! Lie bialgebra structures: 1-cocycles, co-Jacobi conditions, classical
//! r-matrices and the branch classification on the oscillator algebra.

mod branch;
mod coboundary;
mod cocycle;
mod family;
mod first_order;
mod oscillator;

pub use branch::{split_monomial_ideal, BranchConstraints};
pub use coboundary::{
    delta_from_r, is_ad_invariant, r_from_delta, reduce_coefficients, schouten, wedge2_coordinates,
    wedge2_from_coordinates,
};
pub use cocycle::{cocycle_residual, cojacobi_ideal, cojacobi_residual, solve_cocycle};
pub use first_order::first_order_cocommutator;
pub use family::{classify, Branch, Classification, CocommutatorFamily};
pub use oscillator::{
    classify_h4, identification, oscillator_family, oscillator_r_matrix, shift_automorphism,
    standard_r_tensor, swap_automorphism, triangularity_polynomial, BranchKind, BranchReport, H4Classification,
};

use thiserror::Error;

use crate::lie::LieError;
use crate::math::{MathError, Poly};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BialgebraError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Math(#[from] MathError),
    #[error("family coefficient {0} is not linear in the parameters")]
    NotLinear(Poly),
    #[error("ideal generator {0} is not a monomial")]
    NonMonomialIdeal(Poly),
    #[error("{0} does not lie in the family")]
    NotInFamily(String),
    #[error("coefficient {coefficient} is not a multiple of {divisor}")]
    ReductionFailure { coefficient: Poly, divisor: Poly },
    #[error("order-z term of the coproduct of generator {0} is not a wedge of generators")]
    FirstOrderNotLieWedge(usize),
}
