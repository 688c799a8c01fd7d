//! Realization of the Jordanian oscillator by one boson `[a-, a+] = 1`,
//! with the free parameters `β`, `δ` kept symbolic.

use crate::check::{labeled_check, Check, Labeled};
use crate::math::{factorial, Poly, Series, Symbol};
use crate::pbw::{
    classical_h4, deformed_h4, exp_of_generator, osc, quantum_casimir, weyl, weyl_algebra, NcAlgebra, PbwElement,
};

pub fn beta() -> Poly {
    Poly::var("beta")
}

pub fn delta() -> Poly {
    Poly::var("delta")
}

/// Images of `M, A-, A+, N` (PBW order) in the Weyl algebra:
/// `A+ = a+`, `M = δ`, `A- = δ e^{za+} a- + δβ(z/2) e^{za+}`,
/// `N = ((e^{za+} - 1)/z) a- + β(e^{za+} + 1)/2`.
pub fn boson_images(w: &NcAlgebra) -> Vec<PbwElement> {
    let order = w.order();
    let e = exp_of_generator(2, weyl::AP, 1, &Poly::one(), order);
    let mut e_minus_one_over_z = PbwElement::zero(order);
    for k in 1..=order + 1 {
        let mut m = vec![0u32; 2];
        m[weyl::AP] = k as u32;
        e_minus_one_over_z.add_term(m, Series::monomial(Poly::constant(factorial(k as u32).recip()), k - 1, order));
    }
    let am = w.gen(weyl::AM);
    let d = Series::constant(delta(), order);
    let b = Series::constant(beta(), order);
    let half = crate::math::rat(1, 2);

    let mut images = vec![PbwElement::zero(order); 4];
    images[osc::AP] = w.gen(weyl::AP);
    images[osc::M] = w.scalar(d.clone());
    let db_half_z = Series::monomial((&delta() * &beta()).scale(&half), 1, order);
    images[osc::AM] = w.mul(&e, &am).scale(&d).add(&e.scale(&db_half_z));
    images[osc::N] = w
        .mul(&e_minus_one_over_z, &am)
        .add(&e.add(&w.one()).scale(&b).scale_rat(&half));
    images
}

/// `φ(x)` for the algebra map fixed by generator images.
pub fn apply_images(w: &NcAlgebra, images: &[PbwElement], x: &PbwElement) -> PbwElement {
    let mut out = w.zero();
    for (m, c) in x.terms() {
        let mut acc = w.one();
        for (g, &k) in m.iter().enumerate() {
            for _ in 0..k {
                acc = w.mul(&acc, &images[g]);
            }
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// `[φ(x_j), φ(x_i)] - φ(rel(j, i))` for every relation of `target`.
pub fn relation_residuals(
    w: &NcAlgebra,
    target: &NcAlgebra,
    images: &[PbwElement],
) -> Vec<Labeled<PbwElement>> {
    let mut out = Vec::new();
    for j in (0..target.dim()).rev() {
        for i in (0..j).rev() {
            let lhs = w.commutator(&images[j], &images[i]);
            let rhs = apply_images(w, images, target.relation(j, i));
            out.push(Labeled::new(
                format!("[{}, {}]", target.names()[j], target.names()[i]),
                lhs.sub(&rhs),
            ));
        }
    }
    out
}

/// The Casimir evaluated on the realization.
pub fn casimir_value(order: usize) -> PbwElement {
    let w = weyl_algebra(order);
    let h = deformed_h4(order);
    apply_images(&w, &boson_images(&w), &quantum_casimir(&h))
}

#[derive(Clone, Debug)]
pub struct BosonReport {
    pub order: usize,
    pub casimir: String,
    pub checks: Vec<Check>,
}

pub fn verify_boson(order: usize) -> BosonReport {
    let w = weyl_algebra(order);
    let h = deformed_h4(order);
    let images = boson_images(&w);
    let mut checks = vec![labeled_check(
        "boson_relations",
        &relation_residuals(&w, &h, &images),
        PbwElement::is_zero,
    )];

    let c = casimir_value(order);
    let expected = w.scalar(Series::constant(&delta() * &(&beta().scale(&crate::math::int(2)) - &Poly::one()), order));
    checks.push(Check::new(
        "boson_casimir",
        c == expected,
        format!("C = {}", w.format(&c)),
    ));

    // z = 0, β = 0, δ = 1 gives A- = a-, N = a+ a-, M = 1.
    let (b, d) = (Symbol::new("beta"), Symbol::new("delta"));
    let classical: Vec<PbwElement> = images
        .iter()
        .map(|x| x.z_coefficient(0).substitute(&b, &Poly::zero()).substitute(&d, &Poly::one()))
        .collect();
    let res = relation_residuals(&w, &classical_h4(order), &classical);
    checks.push(labeled_check("boson_classical_limit", &res, PbwElement::is_zero));

    BosonReport {
        order,
        casimir: w.format(&c),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::all_passed;

    #[test]
    fn weyl_reordering() {
        let w = weyl_algebra(2);
        let lhs = w.word(&[weyl::AM, weyl::AP]);
        assert_eq!(lhs, w.word(&[weyl::AP, weyl::AM]).add(&w.one()));
        assert_eq!(w.word(&[weyl::AP, weyl::AM]).len(), 1);
        let two = w.gen(weyl::AP).scale_rat(&crate::math::int(2));
        assert_eq!(
            w.word(&[weyl::AM, weyl::AP, weyl::AP]),
            w.word(&[weyl::AP, weyl::AP, weyl::AM]).add(&two)
        );
    }

    #[test]
    fn realization_and_casimir() {
        let r = verify_boson(4);
        assert!(all_passed(&r.checks), "{:?}", r.checks);
    }

    #[test]
    fn casimir_special_values() {
        let c = casimir_value(3);
        let half = c.substitute(&Symbol::new("beta"), &crate::math::poly("1/2"));
        assert!(half.is_zero());
        assert!(c.substitute(&Symbol::new("delta"), &Poly::zero()).is_zero());
    }

    #[test]
    fn wrong_beta_shift_breaks_a_relation() {
        let w = weyl_algebra(3);
        let h = deformed_h4(3);
        let mut images = boson_images(&w);
        // Drop the β-dependent tail of A-.
        let e = exp_of_generator(2, weyl::AP, 1, &Poly::one(), 3);
        images[osc::AM] = w.mul(&e, &w.gen(weyl::AM)).scale(&Series::constant(delta(), 3));
        assert!(relation_residuals(&w, &h, &images).iter().any(|l| !l.value.is_zero()));
    }

    #[test]
    fn order_six() {
        let r = verify_boson(6);
        assert!(all_passed(&r.checks), "{:?}", r.checks);
    }
}
