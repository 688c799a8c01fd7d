//! Verified automorphisms of a Lie algebra and their action on
//! cocommutators and r-matrices.

use super::tensor::{Cocommutator, Tensor, Wedge2};
use super::{LieAlgebra, LieError};
use crate::math::{reduce_by, Frac, Poly, PolyMatrix, Rat};

/// An invertible linear map `O` with `O([x,y]) = [O(x), O(y)]`.
///
/// Entries may be rational functions of parameters: the matrix is stored as
/// `numerator / denom`, legal wherever every polynomial in `assumptions` is
/// nonzero. Column `j` holds the image of `X_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Automorphism {
    forward: PolyMatrix,
    denom: Poly,
    inverse: PolyMatrix,
    inv_denom: Poly,
    assumptions: Vec<Poly>,
}

/// A transformed object together with the scalar denominator it carries.
#[derive(Clone, Debug, PartialEq)]
pub struct Transformed<T> {
    pub numerator: T,
    pub denominator: Poly,
}

impl Automorphism {
    /// `images[j]` lists the coordinates of `O(X_j)`; every entry is divided
    /// by `denom`.
    pub fn new(
        alg: &LieAlgebra,
        images: &[Vec<Poly>],
        denom: Poly,
        assumptions: Vec<Poly>,
    ) -> Result<Self, LieError> {
        let n = alg.dim();
        if images.len() != n || images.iter().any(|c| c.len() != n) || denom.is_zero() {
            return Err(LieError::NotInvertible);
        }
        let forward = PolyMatrix::from_fn(n, n, |i, j| images[j][i].clone());
        let det = forward.det().map_err(|_| LieError::NotInvertible)?;
        if det.is_zero() {
            return Err(LieError::NotInvertible);
        }
        let mut assumptions = assumptions;
        if !det.is_constant() && !assumptions.iter().any(|a| reduce_by(&det, a).is_ok()) {
            assumptions.push(det.monic());
        }
        // O^{-1} = denom * adj(P) / det(P).
        let adj = forward.adjugate().map_err(|_| LieError::NotInvertible)?;
        let (inverse, inv_denom) = cancel(adj.scale(&denom), det, &assumptions);
        let (forward, denom) = cancel(forward, denom, &assumptions);
        let auto = Automorphism {
            forward,
            denom,
            inverse,
            inv_denom,
            assumptions,
        };
        auto.check_brackets(alg)?;
        Ok(auto)
    }

    pub fn from_rational(alg: &LieAlgebra, images: &[Vec<Rat>]) -> Result<Self, LieError> {
        let images: Vec<Vec<Poly>> = images
            .iter()
            .map(|c| c.iter().cloned().map(Poly::constant).collect())
            .collect();
        Automorphism::new(alg, &images, Poly::one(), Vec::new())
    }

    /// The automorphism whose action rewrites objects in the new basis
    /// `X'_i = new_basis[i]` (coordinates over the old basis, divided by
    /// `denom`). This is the inverse of the map `X_i -> X'_i`.
    pub fn from_basis_change(
        alg: &LieAlgebra,
        new_basis: &[Vec<Poly>],
        denom: Poly,
        assumptions: Vec<Poly>,
    ) -> Result<Self, LieError> {
        let change = Automorphism::new(alg, new_basis, denom, assumptions)?;
        Ok(change.inverted())
    }

    pub fn inverted(&self) -> Automorphism {
        Automorphism {
            forward: self.inverse.clone(),
            denom: self.inv_denom.clone(),
            inverse: self.forward.clone(),
            inv_denom: self.denom.clone(),
            assumptions: self.assumptions.clone(),
        }
    }

    pub fn assumptions(&self) -> &[Poly] {
        &self.assumptions
    }

    /// Numerator of the image of `X_j` and the shared denominator.
    pub fn image(&self, j: usize) -> (Vec<Poly>, &Poly) {
        let n = self.forward.rows();
        ((0..n).map(|i| self.forward.get(i, j).clone()).collect(), &self.denom)
    }

    fn images(m: &PolyMatrix) -> Vec<Vec<Poly>> {
        let n = m.rows();
        (0..n)
            .map(|j| (0..n).map(|i| m.get(i, j).clone()).collect())
            .collect()
    }

    /// Checks `denom * P[x_i, x_j] = [P x_i, P x_j]` on all basis pairs.
    fn check_brackets(&self, alg: &LieAlgebra) -> Result<(), LieError> {
        let n = alg.dim();
        let imgs = Automorphism::images(&self.forward);
        for i in 0..n {
            for j in i + 1..n {
                let mut lhs = vec![Poly::zero(); n];
                for (k, c) in alg.bracket(i, j).iter().enumerate() {
                    if num_traits::Zero::is_zero(c) {
                        continue;
                    }
                    for (t, v) in imgs[k].iter().enumerate() {
                        lhs[t] += &v.scale(c);
                    }
                }
                let lhs: Vec<Poly> = lhs.iter().map(|x| x * &self.denom).collect();
                let mut rhs = vec![Poly::zero(); n];
                for (a, pa) in imgs[i].iter().enumerate() {
                    if pa.is_zero() {
                        continue;
                    }
                    for (b, pb) in imgs[j].iter().enumerate() {
                        if pb.is_zero() {
                            continue;
                        }
                        let ab = pa * pb;
                        for (t, c) in alg.bracket(a, b).iter().enumerate() {
                            if !num_traits::Zero::is_zero(c) {
                                rhs[t] += &ab.scale(c);
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Err(LieError::NotAutomorphism(i, j));
                }
            }
        }
        Ok(())
    }

    /// `(O (x) O) r`.
    pub fn apply_r(&self, r: &Wedge2) -> Transformed<Wedge2> {
        let imgs = Automorphism::images(&self.forward);
        let t = r.to_tensor().map_all(&imgs);
        let w = Wedge2::from_tensor(&t).expect("image of a wedge is skew");
        let den = &self.denom * &self.denom;
        let (coeffs, den) = cancel_list(wedge_coeffs(&w), den, &self.assumptions);
        Transformed {
            numerator: rebuild_wedge(&w, coeffs),
            denominator: den,
        }
    }

    /// `(O (x) O) o delta o O^{-1}`.
    pub fn apply_cocommutator(&self, delta: &Cocommutator) -> Transformed<Cocommutator> {
        let n = self.forward.rows();
        let imgs = Automorphism::images(&self.forward);
        let pushed: Vec<Tensor> = delta
            .images
            .iter()
            .map(|w| w.to_tensor().map_all(&imgs))
            .collect();
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            // O^{-1}(X_i) = sum_j inverse[j][i] X_j.
            let mut acc = Tensor::zero(2);
            for (j, t) in pushed.iter().enumerate() {
                let c = self.inverse.get(j, i);
                if !c.is_zero() {
                    acc = acc.add(&t.scale(c));
                }
            }
            images.push(Wedge2::from_tensor(&acc).expect("skew"));
        }
        let den = &(&self.denom * &self.denom) * &self.inv_denom;
        let all: Vec<Poly> = images.iter().flat_map(wedge_coeffs).collect();
        let (all, den) = cancel_list(all, den, &self.assumptions);
        let mut it = all.into_iter();
        let images = images
            .iter()
            .map(|w| {
                let k = w.terms().count();
                rebuild_wedge(w, it.by_ref().take(k).collect())
            })
            .collect();
        Transformed {
            numerator: Cocommutator { images },
            denominator: den,
        }
    }
}

impl<T> Transformed<T> {
    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_one()
    }
}

impl Transformed<Cocommutator> {
    /// Coefficients as fractions, for linear matching against families.
    pub fn coordinates(&self) -> Vec<Frac> {
        self.numerator
            .coordinates()
            .into_iter()
            .map(|c| Frac::new(c, self.denominator.clone()).expect("nonzero denominator"))
            .collect()
    }
}

fn wedge_coeffs(w: &Wedge2) -> Vec<Poly> {
    w.terms().map(|(_, c)| c.clone()).collect()
}

fn rebuild_wedge(shape: &Wedge2, coeffs: Vec<Poly>) -> Wedge2 {
    let mut out = Wedge2::zero();
    for ((&(i, j), _), c) in shape.terms().zip(coeffs) {
        out.add_term(i, j, c);
    }
    out
}

/// Removes common factors of all entries and the denominator, trying the
/// assumption polynomials and the denominator itself.
fn cancel(m: PolyMatrix, den: Poly, factors: &[Poly]) -> (PolyMatrix, Poly) {
    let entries: Vec<Poly> = m.entries().map(|(_, _, p)| p.clone()).collect();
    let (entries, den) = cancel_list(entries, den, factors);
    let cols = m.cols();
    let out = PolyMatrix::from_fn(m.rows(), cols, |i, j| entries[i * cols + j].clone());
    (out, den)
}

fn cancel_list(mut entries: Vec<Poly>, mut den: Poly, factors: &[Poly]) -> (Vec<Poly>, Poly) {
    let mut candidates: Vec<Poly> = factors.to_vec();
    candidates.push(den.clone());
    for f in candidates {
        if f.is_constant() {
            continue;
        }
        while let Ok(d) = reduce_by(&den, &f) {
            let divided: Result<Vec<Poly>, _> = entries.iter().map(|e| reduce_by(e, &f)).collect();
            match divided {
                Ok(e) => {
                    entries = e;
                    den = d;
                }
                Err(_) => break,
            }
        }
    }
    if let Some(c) = den.as_constant() {
        let inv: Rat = <Rat as num_traits::One>::one() / c;
        entries = entries.iter().map(|e| e.scale(&inv)).collect();
        den = Poly::one();
    }
    (entries, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::algebra::h4::*;
    use crate::lie::h4_algebra;
    use crate::math::{int, poly};

    fn unit(n: usize, i: usize) -> Vec<Poly> {
        (0..n).map(|k| if k == i { Poly::one() } else { Poly::zero() }).collect()
    }

    #[test]
    fn identity_leaves_cocommutator_unchanged() {
        let h = h4_algebra();
        let id: Vec<Vec<Poly>> = (0..4).map(|i| unit(4, i)).collect();
        let o = Automorphism::new(&h, &id, Poly::one(), vec![]).unwrap();
        let mut d = Cocommutator::zero(4);
        d.images[N] = Wedge2::term(N, AP, poly("a1"));
        d.images[AM] = Wedge2::term(AM, M, poly("a4"));
        let t = o.apply_cocommutator(&d);
        assert!(t.is_polynomial());
        assert_eq!(t.numerator, d);
    }

    #[test]
    fn swap_candidate_preserves_brackets() {
        // N -> -N, A+ -> A-, A- -> A+, M -> -M.
        let h = h4_algebra();
        let mut imgs = vec![vec![int(0); 4]; 4];
        imgs[N][N] = int(-1);
        imgs[AP][AM] = int(1);
        imgs[AM][AP] = int(1);
        imgs[M][M] = int(-1);
        assert!(Automorphism::from_rational(&h, &imgs).is_ok());
        // Dropping the sign on M breaks [A-, A+] = M.
        imgs[M][M] = int(1);
        assert!(matches!(
            Automorphism::from_rational(&h, &imgs),
            Err(LieError::NotAutomorphism(..))
        ));
    }

    #[test]
    fn parametric_inverse_cancels() {
        let h = h4_algebra();
        // N' = N - (a5/a1) M, written over the denominator a1.
        let mut basis: Vec<Vec<Poly>> = (0..4).map(|i| unit(4, i).iter().map(|p| p * &poly("a1")).collect()).collect();
        basis[N][M] = poly("-a5");
        let o = Automorphism::from_basis_change(&h, &basis, poly("a1"), vec![poly("a1")]).unwrap();
        let (img_n, den) = o.image(N);
        assert_eq!(den, &poly("a1"));
        assert_eq!(img_n, vec![poly("a1"), Poly::zero(), Poly::zero(), poly("a5")]);
    }

    #[test]
    fn singular_map_rejected() {
        let h = h4_algebra();
        let imgs = vec![vec![int(0); 4]; 4];
        assert_eq!(Automorphism::from_rational(&h, &imgs), Err(LieError::NotInvertible));
    }
}
