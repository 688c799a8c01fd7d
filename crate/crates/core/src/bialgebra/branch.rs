//! Zero/nonzero case splits on monomial ideals.

use std::fmt;

use super::BialgebraError;
use crate::math::{Monomial, Poly, Symbol};

/// One stratum: every symbol in `zero` vanishes, every symbol in `nonzero`
/// does not, the rest are free.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BranchConstraints {
    pub zero: Vec<Symbol>,
    pub nonzero: Vec<Symbol>,
}

impl BranchConstraints {
    /// Whether a point (given by which symbols vanish) lies in this stratum.
    pub fn contains(&self, vanishes: impl Fn(&Symbol) -> bool) -> bool {
        self.zero.iter().all(&vanishes) && !self.nonzero.iter().any(vanishes)
    }

    /// Substitutes zero for every vanishing symbol.
    pub fn restrict(&self, p: &Poly) -> Poly {
        let subs: Vec<(Symbol, Poly)> = self.zero.iter().map(|s| (s.clone(), Poly::zero())).collect();
        p.substitute_all(&subs)
    }
}

impl fmt::Display for BranchConstraints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.nonzero.iter().map(|s| format!("{} != 0", s.name())).collect();
        parts.extend(self.zero.iter().map(|s| format!("{} = 0", s.name())));
        if parts.is_empty() {
            f.write_str("no constraints")
        } else {
            f.write_str(&parts.join(", "))
        }
    }
}

/// Splits the zero set of an ideal generated by monomials into disjoint
/// strata. The first symbol (by name) still undecided is taken nonzero in
/// one branch and zero in the other; nonzero branches come first.
pub fn split_monomial_ideal(gens: &[Poly]) -> Result<Vec<BranchConstraints>, BialgebraError> {
    let mut monos = Vec::new();
    for g in gens {
        match g.terms() {
            [] => {}
            [(m, _)] => monos.push(m.clone()),
            _ => return Err(BialgebraError::NonMonomialIdeal(g.clone())),
        }
    }
    let mut out = Vec::new();
    split(&monos, BranchConstraints::default(), &mut out);
    for b in &mut out {
        b.zero.sort();
        b.nonzero.sort();
    }
    Ok(out)
}

fn split(gens: &[Monomial], mut c: BranchConstraints, out: &mut Vec<BranchConstraints>) {
    let mut remaining: Vec<Vec<Symbol>> = Vec::new();
    let mut changed = true;
    while changed {
        changed = false;
        remaining.clear();
        for m in gens {
            let vars: Vec<Symbol> = m.factors().iter().map(|(s, _)| s.clone()).collect();
            if vars.iter().any(|v| c.zero.contains(v)) {
                continue;
            }
            let open: Vec<Symbol> = vars.into_iter().filter(|v| !c.nonzero.contains(v)).collect();
            match open.len() {
                // A product of nonzero symbols cannot vanish.
                0 => return,
                1 => {
                    c.zero.push(open[0].clone());
                    changed = true;
                    break;
                }
                _ => remaining.push(open),
            }
        }
    }
    let Some(v) = remaining.iter().flatten().min().cloned() else {
        out.push(c);
        return;
    };
    let mut nz = c.clone();
    nz.nonzero.push(v.clone());
    split(gens, nz, out);
    c.zero.push(v);
    split(gens, c, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::poly;

    fn names(v: &[Symbol]) -> Vec<&str> {
        v.iter().map(Symbol::name).collect()
    }

    #[test]
    fn oscillator_ideal_gives_three_branches() {
        let b = split_monomial_ideal(&[poly("a1*a2"), poly("a1*a3"), poly("a2*a4")]).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!((names(&b[0].nonzero), names(&b[0].zero)), (vec!["a1"], vec!["a2", "a3"]));
        assert_eq!((names(&b[1].nonzero), names(&b[1].zero)), (vec!["a2"], vec!["a1", "a4"]));
        assert_eq!((names(&b[2].nonzero), names(&b[2].zero)), (vec![], vec!["a1", "a2"]));
    }

    #[test]
    fn trivial_and_non_monomial_ideals() {
        assert_eq!(split_monomial_ideal(&[]).unwrap(), vec![BranchConstraints::default()]);
        assert!(split_monomial_ideal(&[poly("a1 + a2")]).is_err());
        let b = split_monomial_ideal(&[poly("x^2")]).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(names(&b[0].zero), vec!["x"]);
    }
}
