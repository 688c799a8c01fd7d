//! Exact arithmetic: rationals, multivariate polynomials, truncated series
//! and linear algebra over both.

mod linalg;
mod matrix;
mod parse;
mod poly;
mod rat;
mod series;

pub use linalg::{mat_vec, nullspace, nullspace_basis, rref, solve_affine, Frac, SolutionSet};
pub use matrix::PolyMatrix;
pub use parse::parse_poly;
pub use poly::{reduce_by, Monomial, Poly, Symbol};
pub use rat::{factorial, fmt_rat, int, parse_rat, rat, Rat};
pub use series::{Series, DEFAULT_ORDER};

pub(crate) use series::{exp_by_powers, HasValuation};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MathError {
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not a multiple of the divisor")]
    NotMultiple,
    #[error("series has no constant-term inverse")]
    NotInvertible,
    #[error("exponential needs positive z-valuation")]
    Valuation,
    #[error("matrix and right-hand side have inconsistent shapes")]
    Shape,
    #[error("system has no generic solution; obstructions: {obstructions:?}")]
    Unsolvable { obstructions: Vec<Poly> },
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

/// Shorthand used throughout tests and presets.
pub fn poly(text: &str) -> Poly {
    parse_poly(text).unwrap_or_else(|e| panic!("bad polynomial literal {text:?}: {e}"))
}
