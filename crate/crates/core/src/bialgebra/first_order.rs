use super::BialgebraError;
use crate::lie::{Cocommutator, Tensor, Wedge2};
use crate::math::Poly;
use crate::pbw::{lie_to_pbw, Coproduct, NcAlgebra};

/// Reads off `delta(X) = z * [Δ(X) - σΔ(X)]_{z^1}` for each Lie basis
/// element, where the order-one part must be a wedge of generators.
pub fn first_order_cocommutator(alg: &NcAlgebra, coproduct: &Coproduct) -> Result<Cocommutator, BialgebraError> {
    let n = alg.dim();
    let pbw_to_lie = |g: usize| (0..n).find(|&i| lie_to_pbw(i) == g);
    let single = |m: &[u32]| -> Option<usize> {
        let mut found = None;
        for (g, &e) in m.iter().enumerate() {
            match e {
                0 => {}
                1 if found.is_none() => found = Some(g),
                _ => return None,
            }
        }
        found
    };
    let z = Poly::var("z");
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let d = &coproduct.images[lie_to_pbw(i)];
        let skew = d.sub(&d.flip()).z_coefficient(1);
        let mut t = Tensor::zero(2);
        for (k, c) in skew.terms() {
            let c = c.coeff(0);
            if c.is_zero() {
                continue;
            }
            let (a, b) = match (single(&k[0]), single(&k[1])) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(BialgebraError::FirstOrderNotLieWedge(i)),
            };
            let (a, b) = match (pbw_to_lie(a), pbw_to_lie(b)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(BialgebraError::FirstOrderNotLieWedge(i)),
            };
            t.add_term(vec![a, b], &c * &z);
        }
        images.push(Wedge2::from_tensor(&t).map_err(|_| BialgebraError::FirstOrderNotLieWedge(i))?);
    }
    Ok(Cocommutator { images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::h4;
    use crate::pbw::{deformed_h4, jordanian_coproduct, standard_coproduct, standard_h4};

    fn z() -> Poly {
        Poly::var("z")
    }

    #[test]
    fn jordanian_coproduct_gives_jordanian_cocommutator() {
        let alg = deformed_h4(3);
        let d = first_order_cocommutator(&alg, &jordanian_coproduct(&alg)).unwrap();
        let mut expected = Cocommutator::zero(4);
        expected.images[h4::N] = Wedge2::term(h4::N, h4::AP, z());
        expected.images[h4::AM] = Wedge2::term(h4::AM, h4::AP, z()).add(&Wedge2::term(h4::N, h4::M, z()));
        assert_eq!(d, expected);
        let r = Wedge2::term(h4::N, h4::AP, z());
        assert_eq!(crate::bialgebra::delta_from_r(&crate::lie::h4_algebra(), &r).unwrap(), d);
    }

    #[test]
    fn standard_coproduct_gives_standard_cocommutator() {
        let alg = standard_h4(3);
        let d = first_order_cocommutator(&alg, &standard_coproduct(&alg)).unwrap();
        let mut expected = Cocommutator::zero(4);
        expected.images[h4::AP] = Wedge2::term(h4::AP, h4::M, z());
        expected.images[h4::AM] = Wedge2::term(h4::AM, h4::M, z());
        assert_eq!(d, expected);
        let r = crate::lie::skew_part(&crate::bialgebra::standard_r_tensor()).unwrap();
        assert_eq!(crate::bialgebra::delta_from_r(&crate::lie::h4_algebra(), &r).unwrap(), d);
    }

    #[test]
    fn primitive_coproduct_gives_zero() {
        let alg = deformed_h4(2);
        assert!(first_order_cocommutator(&alg, &Coproduct::primitive(&alg)).unwrap().is_zero());
    }

    #[test]
    fn quadratic_first_order_term_is_rejected() {
        let alg = deformed_h4(2);
        let mut cop = Coproduct::primitive(&alg);
        let zs = crate::math::Series::z(2);
        let sq = alg.word(&[crate::pbw::osc::AP, crate::pbw::osc::AP]);
        cop.images[crate::pbw::osc::N] = cop.images[crate::pbw::osc::N]
            .add(&crate::pbw::TensorElement::from_slots(2, &[sq, alg.one()]).scale(&zs));
        assert_eq!(
            first_order_cocommutator(&alg, &cop),
            Err(BialgebraError::FirstOrderNotLieWedge(h4::N))
        );
    }
}
