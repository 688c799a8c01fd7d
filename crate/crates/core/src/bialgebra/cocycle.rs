use std::collections::BTreeMap;

use num_traits::Zero;

use super::family::CocommutatorFamily;
use super::BialgebraError;
use crate::lie::{adjoint_action, Cocommutator, LieAlgebra, Tensor, Wedge2};
use crate::math::{nullspace_basis, rref, Monomial, Poly, Rat, Symbol};

/// `delta([X_i, X_j]) - ad_{X_i} delta(X_j) + ad_{X_j} delta(X_i)` for each
/// pair `i < j`, as 2-tensors.
pub fn cocycle_residual(alg: &LieAlgebra, delta: &Cocommutator) -> Result<Vec<Tensor>, BialgebraError> {
    let n = alg.dim();
    let tensors: Vec<Tensor> = delta.images.iter().map(Wedge2::to_tensor).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let br: Vec<Poly> = alg
                .bracket(i, j)
                .iter()
                .map(|c| if c.is_zero() { Poly::zero() } else { Poly::constant(c.clone()) })
                .collect();
            let lhs = delta.apply(&br).to_tensor();
            let rhs = adjoint_action(alg, i, &tensors[j])?.sub(&adjoint_action(alg, j, &tensors[i])?);
            out.push(lhs.sub(&rhs));
        }
    }
    Ok(out)
}

/// The general solution of the cocycle condition as a linear family in
/// fresh parameters `c1, c2, ...`, one per nullspace basis vector.
pub fn solve_cocycle(alg: &LieAlgebra) -> Result<CocommutatorFamily, BialgebraError> {
    let n = alg.dim();
    let pairs = n * n.saturating_sub(1) / 2;
    let unknowns = n * pairs;
    // Column u of the constraint matrix is the residual of the u-th unit map.
    let mut columns: Vec<Vec<Rat>> = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let mut coords = vec![Poly::zero(); unknowns];
        coords[u] = Poly::one();
        let unit = Cocommutator::from_coordinates(n, &coords);
        let mut col = Vec::new();
        for t in cocycle_residual(alg, &unit)? {
            let w = Wedge2::from_tensor(&t)?;
            for a in 0..n {
                for b in a + 1..n {
                    col.push(w.coeff(a, b).constant_term());
                }
            }
        }
        columns.push(col);
    }
    let rows = columns.first().map_or(0, Vec::len);
    let matrix: Vec<Vec<Rat>> = (0..rows)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let basis = nullspace_basis(&matrix, unknowns);
    let params: Vec<Symbol> = (1..=basis.len()).map(|k| Symbol::new(&format!("c{k}"))).collect();
    let mut coords = vec![Poly::zero(); unknowns];
    for (v, p) in basis.iter().zip(&params) {
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                coords[k] += &Poly::symbol(p).scale(c);
            }
        }
    }
    Ok(CocommutatorFamily {
        delta: Cocommutator::from_coordinates(n, &coords),
        params,
    })
}

/// Cyclic sum of `(delta (x) id) delta(X_i)` for every basis element.
pub fn cojacobi_residual(delta: &Cocommutator) -> Vec<Tensor> {
    let tensors: Vec<Tensor> = delta.images.iter().map(Wedge2::to_tensor).collect();
    tensors
        .iter()
        .map(|t| {
            let mut first = Tensor::zero(3);
            for (idx, c) in t.terms() {
                let left = tensors[idx[0]].scale(c);
                first = first.add(&left.tensor(&Tensor::basis(&[idx[1]])));
            }
            first
                .add(&first.permute(&[1, 2, 0]))
                .add(&first.permute(&[2, 0, 1]))
        })
        .collect()
}

/// Generators of the span of all co-Jacobi coefficients: the rows of the
/// reduced echelon form over the monomial basis, each with leading
/// coefficient 1.
pub fn cojacobi_ideal(delta: &Cocommutator) -> Vec<Poly> {
    let polys: Vec<Poly> = cojacobi_residual(delta)
        .iter()
        .flat_map(|t| t.terms().map(|(_, c)| c.clone()).collect::<Vec<_>>())
        .collect();
    span_basis(&polys)
}

/// Reduced echelon basis of the rational span of `polys`.
pub(crate) fn span_basis(polys: &[Poly]) -> Vec<Poly> {
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let len = index.len();
            index.entry(m.clone()).or_insert(len);
        }
    }
    // Columns ordered from the largest monomial down so pivots are leading terms.
    let monos: Vec<Monomial> = index.keys().rev().cloned().collect();
    let col_of: BTreeMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let matrix: Vec<Vec<Rat>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![Rat::zero(); monos.len()];
            for (m, c) in p.terms() {
                row[col_of[m]] = c.clone();
            }
            row
        })
        .collect();
    let (reduced, pivots) = rref(&matrix, monos.len());
    reduced
        .iter()
        .take(pivots.len())
        .map(|row| Poly::from_terms(row.iter().zip(&monos).map(|(c, m)| (m.clone(), c.clone()))))
        .collect()
}
