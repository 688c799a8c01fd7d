//! Hopf-algebra axioms of the deformed oscillator algebra, checked to a
//! fixed z-order: coproduct homomorphism, coassociativity, derived counit
//! and antipode, and centrality of the Casimir.

mod antipode;

pub use antipode::{apply_antipode, apply_counit, derive_antipode_counit, CounitAntipode};

use thiserror::Error;

pub use crate::check::Labeled;
use crate::check::{labeled_check, Check};
use crate::math::{Poly, Series};
use crate::pbw::{
    classical_casimir, classical_h4, deformed_h4_scaled, jordanian_coproduct_scaled, osc,
    quantum_casimir_scaled, Coproduct, NcAlgebra, PbwElement, PbwError, TensorElement,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HopfError {
    #[error(transparent)]
    Pbw(#[from] PbwError),
    #[error("no solution for the {what} of generator {generator}")]
    NoSolution { what: &'static str, generator: String },
}

/// A deformed enveloping algebra with a coproduct on its generators.
#[derive(Debug)]
pub struct HopfData {
    pub alg: NcAlgebra,
    pub coproduct: Coproduct,
}

impl HopfData {
    pub fn jordanian(order: usize) -> Self {
        HopfData::jordanian_scaled(order, &Poly::one())
    }

    /// The Jordanian structure with `z` replaced by `lambda z`.
    pub fn jordanian_scaled(order: usize, lambda: &Poly) -> Self {
        let alg = deformed_h4_scaled(order, lambda);
        let coproduct = jordanian_coproduct_scaled(&alg, lambda);
        HopfData { alg, coproduct }
    }

    pub fn name(&self, g: usize) -> &str {
        self.alg.names()[g]
    }
}

/// `Δ(x_j x_i - x_i x_j) - [Δ(x_j), Δ(x_i)]` for every pair `j > i`.
pub fn check_hom(h: &HopfData) -> Vec<Labeled<TensorElement>> {
    let alg = &h.alg;
    let mut out = Vec::new();
    for j in (0..alg.dim()).rev() {
        for i in (0..j).rev() {
            let rel = alg.commutator(&alg.gen(j), &alg.gen(i));
            let lhs = h.coproduct.apply(alg, &rel);
            let rhs = alg.tensor_commutator(&h.coproduct.images[j], &h.coproduct.images[i]);
            out.push(Labeled {
                label: format!("[{}, {}]", h.name(j), h.name(i)),
                value: lhs.sub(&rhs),
            });
        }
    }
    out
}

/// `(Δ ⊗ id)Δ(X) - (id ⊗ Δ)Δ(X)` per generator.
pub fn check_coassoc(h: &HopfData) -> Vec<Labeled<TensorElement>> {
    let alg = &h.alg;
    (0..alg.dim())
        .rev()
        .map(|g| {
            let d = &h.coproduct.images[g];
            let left = d.map_slot(0, |m| h.coproduct.apply_mono(alg, m));
            let right = d.map_slot(1, |m| h.coproduct.apply_mono(alg, m));
            Labeled {
                label: h.name(g).to_string(),
                value: left.sub(&right),
            }
        })
        .collect()
}

/// `[C, X]` for every generator.
pub fn casimir_centrality(alg: &NcAlgebra, c: &PbwElement) -> Vec<Labeled<PbwElement>> {
    (0..alg.dim())
        .rev()
        .map(|g| Labeled {
            label: alg.names()[g].to_string(),
            value: alg.commutator(c, &alg.gen(g)),
        })
        .collect()
}

/// The z^0 part of every relation, to compare with the classical algebra.
pub fn classical_limit_relations(alg: &NcAlgebra) -> Vec<Labeled<PbwElement>> {
    let mut out = Vec::new();
    for j in (0..alg.dim()).rev() {
        for i in (0..j).rev() {
            out.push(Labeled {
                label: format!("[{}, {}]", alg.names()[j], alg.names()[i]),
                value: alg.relation(j, i).z_coefficient(0),
            });
        }
    }
    out
}

pub fn tensor_residual_check(name: &str, rs: &[Labeled<TensorElement>]) -> Check {
    labeled_check(name, rs, TensorElement::is_zero)
}

pub fn element_residual_check(name: &str, rs: &[Labeled<PbwElement>]) -> Check {
    labeled_check(name, rs, PbwElement::is_zero)
}

/// Everything the Hopf layer reports.
#[derive(Clone, Debug)]
pub struct HopfReport {
    pub order: usize,
    pub counit: Vec<(String, Series)>,
    pub antipode: Vec<(String, String)>,
    pub antipode_squared: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

pub fn verify_hopf(order: usize) -> Result<HopfReport, HopfError> {
    let h = HopfData::jordanian(order);
    let alg = &h.alg;
    let mut checks = vec![
        tensor_residual_check("hopf_homomorphism", &check_hom(&h)),
        tensor_residual_check("hopf_coassociativity", &check_coassoc(&h)),
    ];
    let ca = derive_antipode_counit(&h)?;
    checks.extend(ca.checks.iter().cloned());

    let c = quantum_casimir_scaled(alg, &Poly::one());
    checks.push(element_residual_check("casimir_central", &casimir_centrality(alg, &c)));
    let lambda = Poly::var("lambda");
    let scaled = HopfData::jordanian_scaled(order, &lambda);
    let cs = quantum_casimir_scaled(&scaled.alg, &lambda);
    checks.push(element_residual_check(
        "casimir_central_rescaled",
        &casimir_centrality(&scaled.alg, &cs),
    ));
    let classical = classical_h4(order);
    let c0 = classical_casimir(&classical);
    checks.push(element_residual_check(
        "classical_casimir_central",
        &casimir_centrality(&classical, &c0),
    ));
    checks.push(Check::new(
        "casimir_classical_limit",
        c.z_coefficient(0) == c0,
        "z^0 part of the quantum Casimir against 2NM - A+A- - A-A+",
    ));
    let limit_ok = classical_limit_relations(alg)
        .iter()
        .zip(classical_limit_relations(&classical))
        .all(|(a, b)| a.value == b.value);
    checks.push(Check::new(
        "relations_classical_limit",
        limit_ok,
        "z^0 part of every deformed relation against the classical one",
    ));
    let prim = Coproduct::primitive(alg);
    let cop_ok = h
        .coproduct
        .images
        .iter()
        .zip(&prim.images)
        .all(|(d, p)| d.z_coefficient(0) == *p);
    checks.push(Check::new(
        "coproduct_classical_limit",
        cop_ok,
        "z^0 part of the coproduct is primitive",
    ));

    let names = alg.names();
    let order_names = [osc::N, osc::AP, osc::AM, osc::M];
    Ok(HopfReport {
        order,
        counit: order_names.iter().map(|&g| (names[g].to_string(), ca.counit[g].clone())).collect(),
        antipode: order_names
            .iter()
            .map(|&g| (names[g].to_string(), alg.format(&ca.antipode[g])))
            .collect(),
        antipode_squared: order_names
            .iter()
            .map(|&g| (names[g].to_string(), alg.format(&ca.antipode_squared[g])))
            .collect(),
        checks,
    })
}

#[cfg(test)]
mod tests;
