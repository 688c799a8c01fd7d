//! The quantum oscillator group: exact coordinate algebra, RTT relations
//! for the represented R-matrix, the coordinate coproduct, and first-order
//! agreement with the Sklyanin bracket.

mod bch;
mod coord;
mod frt;
mod sklyanin;

pub use bch::{conjugation_oracle, embed, rescaled_coordinate_algebra};
pub use coord::{QCoordAlgebra, QElem, QGen, QMono, QTensor};
pub use frt::{
    coproduct_coassociativity, coproduct_relation_residuals, counit, counit_residuals, matrix_coproduct_residuals,
    quantum_t, rtt_residual, QCoproduct, QMatrix,
};
pub use sklyanin::{bracket_matrix, rho, sklyanin_checks, sklyanin_sign, to_commutative, BracketTable, SklyaninSign};

use crate::check::{labeled_check, Check};
use crate::math::{Poly, PolyMatrix, Symbol};

/// `D(R) = I⊗I + z(D(N)⊗D(A+) - D(A+)⊗D(N))`.
pub fn represented_r() -> PolyMatrix {
    &PolyMatrix::identity(9) + &rho().scale(&Poly::var("z"))
}

fn vanishes_at_zero(x: &QElem) -> bool {
    let z = Symbol::new("z");
    x.terms().all(|(_, c)| c.substitute(&z, &Poly::zero()).is_zero())
}

#[derive(Clone, Debug)]
pub struct FrtReport {
    pub control_nonzero_entries: usize,
    pub checks: Vec<Check>,
}

pub fn verify_frt() -> FrtReport {
    let q = QCoordAlgebra::new();
    let r = represented_r();
    let mut checks = vec![labeled_check("rtt", &rtt_residual(&q, &r), QElem::is_zero)];

    let control = rtt_residual(&QCoordAlgebra::without_ladder_relation(), &r);
    let nonzero: Vec<&QElem> = control.iter().map(|l| &l.value).filter(|x| !x.is_zero()).collect();
    checks.push(Check::new(
        "rtt_negative_control",
        !nonzero.is_empty() && nonzero.iter().all(|x| vanishes_at_zero(x)),
        format!(
            "commuting a+, a- leave {} nonzero entries, all O(z)",
            nonzero.len()
        ),
    ));

    let oracle = conjugation_oracle(4);
    checks.push(labeled_check("conjugation_oracle", &oracle, |x| x.is_zero()));

    let cop = QCoproduct::standard(&q);
    checks.push(labeled_check(
        "qgroup_coproduct_relations",
        &coproduct_relation_residuals(&q, &cop),
        QTensor::is_zero,
    ));
    checks.push(labeled_check(
        "qgroup_coassociativity",
        &coproduct_coassociativity(&q, &cop),
        QTensor::is_zero,
    ));
    checks.push(labeled_check("qgroup_counit", &counit_residuals(&q, &cop), QElem::is_zero));
    checks.push(labeled_check(
        "qgroup_matrix_coproduct",
        &matrix_coproduct_residuals(&q, &cop),
        QTensor::is_zero,
    ));

    let classical = QCoordAlgebra::with_parameter(Poly::zero());
    let commutative = QGen::ALL.iter().all(|&x| {
        QGen::ALL
            .iter()
            .all(|&y| classical.commutator(&QElem::gen(x), &QElem::gen(y)).is_zero())
    });
    let ccop = QCoproduct::standard(&classical);
    let hopf = coproduct_relation_residuals(&classical, &ccop).iter().all(|l| l.value.is_zero())
        && coproduct_coassociativity(&classical, &ccop).iter().all(|l| l.value.is_zero());
    checks.push(Check::new(
        "qgroup_classical_limit",
        commutative && hopf,
        "at z = 0 the coordinates commute and the coproduct is still a coassociative algebra map",
    ));

    FrtReport {
        control_nonzero_entries: nonzero.len(),
        checks,
    }
}

#[derive(Clone, Debug)]
pub struct SklyaninReport {
    pub sign: SklyaninSign,
    pub checks: Vec<Check>,
}

pub fn verify_sklyanin() -> SklyaninReport {
    let (checks, sign) = sklyanin_checks(&QCoordAlgebra::new());
    SklyaninReport { sign, checks }
}

#[cfg(test)]
mod tests;
