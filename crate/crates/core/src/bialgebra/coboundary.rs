use num_traits::Zero;

use super::BialgebraError;
use crate::lie::{adjoint_action, Cocommutator, LieAlgebra, Tensor, Wedge2, Wedge3};
use crate::math::{reduce_by, solve_affine, Poly, SolutionSet};

/// Coefficients of `w` on `X_i ^ X_j`, `i < j`, in lexicographic order.
pub fn wedge2_coordinates(w: &Wedge2, n: usize) -> Vec<Poly> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(w.coeff(i, j));
        }
    }
    out
}

pub fn wedge2_from_coordinates(coords: &[Poly], n: usize) -> Wedge2 {
    let mut w = Wedge2::zero();
    let mut it = coords.iter();
    for i in 0..n {
        for j in i + 1..n {
            if let Some(c) = it.next() {
                w.add_term(i, j, c.clone());
            }
        }
    }
    w
}

/// `delta(x) = [1 (x) x + x (x) 1, r]` on every basis element.
pub fn delta_from_r(alg: &LieAlgebra, r: &Wedge2) -> Result<Cocommutator, BialgebraError> {
    let t = r.to_tensor();
    let images = (0..alg.dim())
        .map(|x| Ok(Wedge2::from_tensor(&adjoint_action(alg, x, &t)?)?))
        .collect::<Result<Vec<_>, BialgebraError>>()?;
    Ok(Cocommutator { images })
}

/// All `r` in `Lambda^2 g` with `delta_from_r(r) = delta`, valid for generic
/// parameter values. Fails with `Unsolvable` when `delta` is not a
/// coboundary.
pub fn r_from_delta(alg: &LieAlgebra, delta: &Cocommutator) -> Result<SolutionSet, BialgebraError> {
    let n = alg.dim();
    let unknowns = n * n.saturating_sub(1) / 2;
    let mut columns: Vec<Vec<Poly>> = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let mut coords = vec![Poly::zero(); unknowns];
        coords[u] = Poly::one();
        let d = delta_from_r(alg, &wedge2_from_coordinates(&coords, n))?;
        columns.push(d.coordinates());
    }
    let rhs = delta.coordinates();
    let matrix: Vec<Vec<Poly>> = (0..rhs.len())
        .map(|row| columns.iter().map(|c| c[row].clone()).collect())
        .collect();
    if unknowns == 0 {
        if rhs.iter().all(Poly::is_zero) {
            return Ok(SolutionSet {
                particular: Vec::new(),
                kernel: Vec::new(),
                assumptions: Vec::new(),
            });
        }
        return Err(crate::math::MathError::Unsolvable { obstructions: rhs }.into());
    }
    Ok(solve_affine(&matrix, &rhs)?)
}

/// `[[r, r]] = [r12, r13] + [r12, r23] + [r13, r23]`.
pub fn schouten(alg: &LieAlgebra, r: &Wedge2) -> Result<Wedge3, BialgebraError> {
    let t = r.to_tensor();
    let mut out = Tensor::zero(3);
    let terms: Vec<(&Vec<usize>, &Poly)> = t.terms().collect();
    for (ab, c1) in &terms {
        for (cd, c2) in &terms {
            let (a, b, c, d) = (ab[0], ab[1], cd[0], cd[1]);
            let c12 = *c1 * *c2;
            for (k, s) in alg.bracket(a, c).iter().enumerate() {
                if !s.is_zero() {
                    out.add_term(vec![k, b, d], c12.scale(s));
                }
            }
            for (k, s) in alg.bracket(b, c).iter().enumerate() {
                if !s.is_zero() {
                    out.add_term(vec![a, k, d], c12.scale(s));
                }
            }
            for (k, s) in alg.bracket(b, d).iter().enumerate() {
                if !s.is_zero() {
                    out.add_term(vec![a, c, k], c12.scale(s));
                }
            }
        }
    }
    Ok(Wedge3::from_tensor(&out)?)
}

/// Whether every basis element annihilates `t` under the adjoint action.
pub fn is_ad_invariant(alg: &LieAlgebra, t: &Tensor) -> Result<bool, BialgebraError> {
    for x in 0..alg.dim() {
        if !adjoint_action(alg, x, t)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Quotients of every coefficient of `w` by `divisor`, or the first
/// coefficient that is not a multiple.
pub fn reduce_coefficients(w: &Wedge3, divisor: &Poly) -> Result<Vec<Poly>, BialgebraError> {
    w.terms()
        .map(|(_, c)| {
            reduce_by(c, divisor).map_err(|_| BialgebraError::ReductionFailure {
                coefficient: c.clone(),
                divisor: divisor.clone(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::h4::*;
    use crate::lie::h4_algebra;
    use crate::math::{poly, MathError};

    #[test]
    fn zero_r_gives_zero_delta() {
        let h = h4_algebra();
        assert!(delta_from_r(&h, &Wedge2::zero()).unwrap().is_zero());
        assert!(schouten(&h, &Wedge2::zero()).unwrap().is_zero());
        let sol = r_from_delta(&h, &Cocommutator::zero(4)).unwrap();
        assert!(sol.contains(&vec![Poly::zero(); 6]));
    }

    #[test]
    fn jordanian_r_matrix() {
        let h = h4_algebra();
        let r = Wedge2::term(N, AP, poly("z"));
        let d = delta_from_r(&h, &r).unwrap();
        assert!(d.images[AP].is_zero());
        assert!(d.images[M].is_zero());
        assert_eq!(d.images[N], Wedge2::term(N, AP, poly("z")));
        let mut am = Wedge2::term(AM, AP, poly("z"));
        am.add_term(N, M, poly("z"));
        assert_eq!(d.images[AM], am);
        assert!(schouten(&h, &r).unwrap().is_zero());
    }

    #[test]
    fn standard_r_matrix_schouten_is_invariant() {
        let h = h4_algebra();
        let r = Wedge2::term(AM, AP, poly("z"));
        let s = schouten(&h, &r).unwrap();
        assert!(!s.is_zero());
        assert!(is_ad_invariant(&h, &s.to_tensor()).unwrap());
        let d = delta_from_r(&h, &r).unwrap();
        assert_eq!(d.images[AP], Wedge2::term(AP, M, poly("z")));
        assert_eq!(d.images[AM], Wedge2::term(AM, M, poly("z")));
        assert!(d.images[N].is_zero());
    }

    #[test]
    fn non_coboundary_detected() {
        // On an abelian algebra every nonzero delta is a cocycle but no
        // coboundary.
        let ab = LieAlgebra::abelian(2);
        let mut d = Cocommutator::zero(2);
        d.images[0] = Wedge2::term(0, 1, Poly::one());
        assert!(matches!(
            r_from_delta(&ab, &d),
            Err(BialgebraError::Math(MathError::Unsolvable { .. }))
        ));
    }

    #[test]
    fn reduction_failure_names_the_coefficient() {
        let h = h4_algebra();
        let s = schouten(&h, &Wedge2::term(AM, AP, poly("z"))).unwrap();
        assert!(matches!(
            reduce_coefficients(&s, &poly("a1")),
            Err(BialgebraError::ReductionFailure { .. })
        ));
        assert!(reduce_coefficients(&s, &poly("z^2")).is_ok());
    }
}
