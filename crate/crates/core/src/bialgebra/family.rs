use num_traits::Zero;

use super::branch::{split_monomial_ideal, BranchConstraints};
use super::coboundary::{is_ad_invariant, r_from_delta, schouten, wedge2_from_coordinates};
use super::cocycle::{cocycle_residual, cojacobi_ideal, cojacobi_residual, solve_cocycle};
use super::BialgebraError;
use crate::check::Check;
use crate::lie::{Cocommutator, LieAlgebra, Wedge2, Wedge3};
use crate::math::{solve_affine, Frac, Poly, Rat, SolutionSet, Symbol};

/// A cocommutator depending linearly on named parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct CocommutatorFamily {
    pub delta: Cocommutator,
    pub params: Vec<Symbol>,
}

impl CocommutatorFamily {
    /// Rational matrix `A` with `coordinates = A * params`.
    pub fn linear_matrix(&self) -> Result<Vec<Vec<Rat>>, BialgebraError> {
        self.delta
            .coordinates()
            .iter()
            .map(|c| {
                let row: Vec<Rat> = self
                    .params
                    .iter()
                    .map(|p| c.derivative(p).as_constant().unwrap_or_else(Rat::zero))
                    .collect();
                let rebuilt = row
                    .iter()
                    .zip(&self.params)
                    .fold(Poly::zero(), |acc, (r, p)| &acc + &Poly::symbol(p).scale(r));
                if &rebuilt == c {
                    Ok(row)
                } else {
                    Err(BialgebraError::NotLinear(c.clone()))
                }
            })
            .collect()
    }

    /// The parameter values (polynomials in other symbols) at which the
    /// family equals `delta`, if any.
    pub fn locate(&self, delta: &Cocommutator) -> Result<Vec<Poly>, BialgebraError> {
        let a = self.linear_matrix()?;
        let matrix: Vec<Vec<Poly>> = a
            .iter()
            .map(|row| row.iter().map(|c| Poly::constant(c.clone())).collect())
            .collect();
        let sol = solve_affine(&matrix, &delta.coordinates())
            .map_err(|_| BialgebraError::NotInFamily(format!("{delta:?}")))?;
        if sol.dimension() != 0 {
            return Err(BialgebraError::NotInFamily("parameters are not determined".into()));
        }
        sol.particular
            .into_iter()
            .map(|f| f.into_poly().map_err(BialgebraError::from))
            .collect()
    }

    pub fn substitute(&self, values: &[Poly]) -> Cocommutator {
        let subs: Vec<(Symbol, Poly)> = self.params.iter().cloned().zip(values.iter().cloned()).collect();
        self.delta.map_coeffs(|c| c.substitute_all(&subs))
    }

    pub fn restrict(&self, c: &BranchConstraints) -> Cocommutator {
        self.delta.map_coeffs(|p| c.restrict(p))
    }

    /// Expresses this family's parameters through another family's:
    /// `self.params[k] = renaming[k]` makes the two families coincide.
    pub fn renaming_to(&self, other: &CocommutatorFamily) -> Result<Vec<Poly>, BialgebraError> {
        self.locate(&other.delta)
    }
}

/// One stratum of the co-Jacobi variety with its coboundary data.
#[derive(Clone, Debug)]
pub struct Branch {
    pub constraints: BranchConstraints,
    pub delta: Cocommutator,
    /// `None` when no r-matrix exists, i.e. the branch is not coboundary.
    pub r_solution: Option<SolutionSet>,
    pub r_particular: Option<Wedge2>,
    pub schouten: Option<Wedge3>,
    pub checks: Vec<Check>,
}

impl Branch {
    pub fn is_coboundary(&self) -> bool {
        self.r_solution.is_some()
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub family: CocommutatorFamily,
    pub ideal: Vec<Poly>,
    pub branches: Vec<Branch>,
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
}

/// Runs the classification pipeline on any Lie algebra: cocycles,
/// co-Jacobi ideal, case split (when the ideal is monomial) and the
/// coboundary problem on each branch.
pub fn classify(alg: &LieAlgebra) -> Result<Classification, BialgebraError> {
    let family = solve_cocycle(alg)?;
    classify_family(alg, family)
}

pub(crate) fn classify_family(
    alg: &LieAlgebra,
    family: CocommutatorFamily,
) -> Result<Classification, BialgebraError> {
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let residual = count_terms(&cocycle_residual(alg, &family.delta)?);
    checks.push(Check::residual(
        "cocycle_family",
        residual,
        &format!("{}-parameter cocycle family", family.params.len()),
    ));
    let ideal = cojacobi_ideal(&family.delta);
    let strata = match split_monomial_ideal(&ideal) {
        Ok(s) => s,
        Err(BialgebraError::NonMonomialIdeal(g)) => {
            notes.push(format!(
                "co-Jacobi ideal has non-monomial generator {g}; branches not enumerated"
            ));
            vec![BranchConstraints::default()]
        }
        Err(e) => return Err(e),
    };
    let mut branches = Vec::with_capacity(strata.len());
    for c in strata {
        branches.push(analyse_branch(alg, &family, c, !notes.is_empty())?);
    }
    Ok(Classification {
        family,
        ideal,
        branches,
        notes,
        checks,
    })
}

fn analyse_branch(
    alg: &LieAlgebra,
    family: &CocommutatorFamily,
    constraints: BranchConstraints,
    ideal_pending: bool,
) -> Result<Branch, BialgebraError> {
    let n = alg.dim();
    let delta = family.restrict(&constraints);
    let mut checks = Vec::new();
    if !ideal_pending {
        let cj = cojacobi_residual(&delta)
            .iter()
            .flat_map(|t| t.terms().map(|(_, c)| c.clone()).collect::<Vec<_>>())
            .filter(|c| !c.is_zero())
            .count();
        checks.push(Check::residual("cojacobi", cj, &constraints.to_string()));
    }
    let (r_solution, r_particular, schouten_value) = match r_from_delta(alg, &delta) {
        Ok(sol) => {
            let r = wedge2_from_coordinates(
                &sol.particular.iter().map(frac_numerator).collect::<Vec<_>>(),
                n,
            );
            let s = if sol.particular.iter().all(|f| f.as_poly().is_some()) {
                let s = schouten(alg, &r)?;
                checks.push(Check::new(
                    "schouten_ad_invariant",
                    is_ad_invariant(alg, &s.to_tensor())?,
                    "[[r,r]] of the particular r-matrix",
                ));
                Some(s)
            } else {
                None
            };
            (Some(sol), Some(r), s)
        }
        Err(BialgebraError::Math(crate::math::MathError::Unsolvable { .. })) => (None, None, None),
        Err(e) => return Err(e),
    };
    Ok(Branch {
        constraints,
        delta,
        r_solution,
        r_particular,
        schouten: schouten_value,
        checks,
    })
}

fn frac_numerator(f: &Frac) -> Poly {
    f.num.clone()
}

pub(crate) fn count_terms(ts: &[crate::lie::Tensor]) -> usize {
    ts.iter().map(|t| t.terms().count()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::h4_algebra;

    #[test]
    fn one_dimensional_classification_is_trivial() {
        let c = classify(&LieAlgebra::abelian(1)).unwrap();
        assert!(c.family.params.is_empty());
        assert!(c.ideal.is_empty());
        assert_eq!(c.branches.len(), 1);
        assert!(c.branches[0].is_coboundary());
        assert!(c.checks.iter().chain(&c.branches[0].checks).all(|k| k.passed));
    }

    #[test]
    fn abelian_plane_is_not_coboundary() {
        let c = classify(&LieAlgebra::abelian(2)).unwrap();
        assert_eq!(c.family.params.len(), 2);
        assert!(c.branches.iter().all(|b| !b.is_coboundary()));
    }

    #[test]
    fn h4_raw_family_is_linear_and_locates_itself() {
        let c = classify(&h4_algebra()).unwrap();
        let fam = &c.family;
        assert_eq!(fam.linear_matrix().unwrap().len(), 24);
        let vals: Vec<Poly> = fam.params.iter().map(Poly::symbol).collect();
        assert_eq!(fam.locate(&fam.delta).unwrap(), vals);
    }
}
