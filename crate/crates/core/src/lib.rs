//! Exact computations for the harmonic oscillator Lie bialgebras and their
//! Jordanian quantization: cocycle classification, a truncated-series PBW
//! engine, Hopf axioms, the universal R-matrix, the quantum group and the
//! boson realization.

pub mod bialgebra;
pub mod boson;
pub mod check;
pub mod hopf;
pub mod lie;
pub mod math;
pub mod pbw;
pub mod qgroup;
pub mod rmatrix;
