//! The universal R-matrix of the Jordanian oscillator, its Yang-Baxter and
//! intertwining properties, and the 3x3 matrix representation.

mod rep;

pub use rep::{
    group_element, group_element_product, matrix_qybe_residual, rep_checks, rep_element, rep_r_matrix, rep_tensor,
    Rep,
};

use crate::check::{labeled_check, Check, Labeled};
use crate::math::Series;
use crate::pbw::{deformed_h4, jordanian_coproduct, osc, Coproduct, NcAlgebra, PbwError, TensorElement};

/// `R = exp(-z A+⊗N) exp(z N⊗A+)` and `R^{-1} = exp(-z N⊗A+) exp(z A+⊗N)`.
#[derive(Clone, Debug)]
pub struct UniversalR {
    pub r: TensorElement,
    pub r_inv: TensorElement,
}

fn z_pair(alg: &NcAlgebra, a: usize, b: usize, sign: i64) -> TensorElement {
    let order = alg.order();
    let z = Series::z(order).scale(&crate::math::int(sign));
    TensorElement::from_slots(order, &[alg.gen(a), alg.gen(b)]).scale(&z)
}

pub fn build_r(alg: &NcAlgebra) -> Result<UniversalR, PbwError> {
    use osc::{AP, N};
    let left = alg.tensor_exp(&z_pair(alg, AP, N, -1))?;
    let right = alg.tensor_exp(&z_pair(alg, N, AP, 1))?;
    let left_inv = alg.tensor_exp(&z_pair(alg, AP, N, 1))?;
    let right_inv = alg.tensor_exp(&z_pair(alg, N, AP, -1))?;
    Ok(UniversalR {
        r: alg.tensor_mul(&left, &right),
        r_inv: alg.tensor_mul(&right_inv, &left_inv),
    })
}

/// The factor-swapped product `exp(z N⊗A+) exp(-z A+⊗N)`.
pub fn swapped_r(alg: &NcAlgebra) -> Result<TensorElement, PbwError> {
    use osc::{AP, N};
    let left = alg.tensor_exp(&z_pair(alg, AP, N, -1))?;
    let right = alg.tensor_exp(&z_pair(alg, N, AP, 1))?;
    Ok(alg.tensor_mul(&right, &left))
}

/// `R12 R13 R23 - R23 R13 R12`.
pub fn qybe_residual(alg: &NcAlgebra, r: &TensorElement) -> TensorElement {
    let n = alg.dim();
    let r12 = r.embed(3, &[0, 1], n);
    let r13 = r.embed(3, &[0, 2], n);
    let r23 = r.embed(3, &[1, 2], n);
    let lhs = alg.tensor_product(&[&r12, &r13, &r23]);
    let rhs = alg.tensor_product(&[&r23, &r13, &r12]);
    lhs.sub(&rhs)
}

/// `σΔ(X) R - R Δ(X)` per generator.
pub fn intertwine_residual(alg: &NcAlgebra, r: &TensorElement, cop: &Coproduct) -> Vec<Labeled<TensorElement>> {
    (0..alg.dim())
        .rev()
        .map(|g| {
            let d = &cop.images[g];
            let res = alg.tensor_mul(&d.flip(), r).sub(&alg.tensor_mul(r, d));
            Labeled::new(alg.names()[g], res)
        })
        .collect()
}

/// The z-part of `Δ(X) - σΔ(X)` against `[Δ_0(X), r_1]`, where `r_1` is
/// the order-z part of R.
pub fn first_order_intertwining(alg: &NcAlgebra, r: &TensorElement, cop: &Coproduct) -> Vec<Labeled<TensorElement>> {
    let r1 = r.z_coefficient(1);
    (0..alg.dim())
        .rev()
        .map(|g| {
            let d = &cop.images[g];
            let lhs = d.sub(&d.flip()).z_coefficient(1);
            // The deformed product adds higher orders; only z^0 of the bracket counts.
            let rhs = alg.tensor_commutator(&d.z_coefficient(0), &r1).z_coefficient(0);
            Labeled::new(alg.names()[g], lhs.sub(&rhs))
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct RMatrixReport {
    pub order: usize,
    pub first_order: String,
    pub control_residual_terms: usize,
    pub represented_r: String,
    pub checks: Vec<Check>,
}

pub fn verify_rmatrix(order: usize) -> Result<RMatrixReport, PbwError> {
    use osc::{AP, N};
    let alg = deformed_h4(order);
    let ur = build_r(&alg)?;
    let one2 = alg.tensor_one(2);
    let mut checks = Vec::new();

    checks.push(Check::new(
        "r_classical_limit",
        ur.r.z_coefficient(0) == one2,
        "z^0 part of R is 1⊗1",
    ));
    let r1 = ur.r.z_coefficient(1);
    let expected = TensorElement::from_slots(order, &[alg.gen(N), alg.gen(AP)])
        .sub(&TensorElement::from_slots(order, &[alg.gen(AP), alg.gen(N)]));
    checks.push(Check::new(
        "r_first_order",
        r1 == expected,
        format!("z^1 part of R: {}", r1.fmt_with(&alg.names())),
    ));
    let prod = alg.tensor_mul(&ur.r, &ur.r_inv);
    let prod2 = alg.tensor_mul(&ur.r_inv, &ur.r);
    checks.push(Check::residual(
        "r_inverse",
        prod.sub(&one2).residual_size() + prod2.sub(&one2).residual_size(),
        "R R^-1 - 1⊗1 and R^-1 R - 1⊗1",
    ));
    let q = qybe_residual(&alg, &ur.r);
    checks.push(Check::residual("qybe", q.residual_size(), "R12 R13 R23 - R23 R13 R12"));
    let trivial = qybe_residual(&alg, &one2);
    checks.push(Check::residual("qybe_trivial", trivial.residual_size(), "R = 1⊗1"));

    let control = qybe_residual(&alg, &swapped_r(&alg)?);
    let control_terms = control.residual_size();
    checks.push(Check::new(
        "qybe_negative_control",
        control_terms > 0,
        format!("factor-swapped product leaves {control_terms} nonzero residual terms"),
    ));

    let cop = jordanian_coproduct(&alg);
    checks.push(labeled_check(
        "intertwining",
        &intertwine_residual(&alg, &ur.r, &cop),
        TensorElement::is_zero,
    ));
    checks.push(labeled_check(
        "intertwining_first_order",
        &first_order_intertwining(&alg, &ur.r, &cop),
        TensorElement::is_zero,
    ));

    let rep = Rep::oscillator();
    let mut rep_results = rep_checks(&rep);
    // The representation commutes with the abstract QYBE residual.
    let imaged = rep_tensor(&rep, &q);
    rep_results.push(Check::new(
        "rep_functoriality",
        imaged == matrix_qybe_residual(&rep_r_matrix(&rep, &ur.r)),
        "(D⊗D⊗D) of the abstract QYBE residual equals the matrix residual",
    ));
    checks.extend(rep_results);

    Ok(RMatrixReport {
        order,
        first_order: format!("z({})", r1.fmt_with(&alg.names())),
        control_residual_terms: control_terms,
        represented_r: rep_r_matrix(&rep, &ur.r).to_string(),
        checks,
    })
}
