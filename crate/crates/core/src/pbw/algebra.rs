use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::element::{Mono, PbwElement};
use super::PbwError;
use crate::math::{exp_by_powers, Series};

type Product = Arc<Vec<(Mono, Series)>>;

/// An algebra with generators `x_0 < x_1 < ... < x_{n-1}` presented by
/// commutation relations `x_j x_i = x_i x_j + rel(j, i)` for `j > i`,
/// with coefficients truncated at a fixed z-order.
///
/// Products of normal-ordered monomials by generators are memoized.
pub struct NcAlgebra {
    names: Vec<String>,
    order: usize,
    rels: Vec<Vec<PbwElement>>,
    cache: Mutex<HashMap<(Mono, usize), Product>>,
}

impl NcAlgebra {
    /// `rels` lists `((j, i), x_j x_i - x_i x_j)` with `j > i`; unlisted
    /// pairs commute.
    pub fn new(
        names: &[&str],
        order: usize,
        rels: Vec<((usize, usize), PbwElement)>,
    ) -> Result<Self, PbwError> {
        let n = names.len();
        let mut table = vec![vec![PbwElement::zero(order); n]; n];
        for ((j, i), r) in rels {
            if j >= n || i >= j {
                return Err(PbwError::BadRelation(format!("pair ({j}, {i}) must satisfy i < j < {n}")));
            }
            if r.order() != order || r.terms().any(|(m, c)| m.len() != n || c.order() != order) {
                return Err(PbwError::BadRelation(format!("relation ({j}, {i}) has the wrong shape")));
            }
            table[j][i] = r;
        }
        Ok(NcAlgebra {
            names: names.iter().map(|s| s.to_string()).collect(),
            order,
            rels: table,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn names(&self) -> Vec<&str> {
        self.names.iter().map(String::as_str).collect()
    }

    pub fn relation(&self, j: usize, i: usize) -> &PbwElement {
        &self.rels[j][i]
    }

    pub fn one(&self) -> PbwElement {
        PbwElement::one(self.dim(), self.order)
    }

    pub fn zero(&self) -> PbwElement {
        PbwElement::zero(self.order)
    }

    pub fn gen(&self, g: usize) -> PbwElement {
        PbwElement::generator(self.dim(), g, self.order)
    }

    pub fn scalar(&self, c: Series) -> PbwElement {
        PbwElement::scalar(self.dim(), c)
    }

    pub fn format(&self, e: &PbwElement) -> String {
        e.fmt_with(&self.names())
    }

    /// `m * x_g` in normal order.
    pub fn mul_gen(&self, m: &Mono, g: usize) -> Product {
        let last = m.iter().rposition(|&e| e > 0);
        match last {
            None => return Arc::new(vec![(with_bump(m, g, 1), Series::one(self.order))]),
            Some(k) if g >= k => return Arc::new(vec![(with_bump(m, g, 1), Series::one(self.order))]),
            _ => {}
        }
        let key = (m.clone(), g);
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let k = last.expect("checked above");
        // m = p x_k with x_k > x_g, so m x_g = (p x_g) x_k + p rel(k, g).
        let prefix = with_bump(m, k, -1);
        let mut acc = PbwElement::zero(self.order);
        for (m1, c1) in self.mul_gen(&prefix, g).iter() {
            for (m2, c2) in self.mul_gen(m1, k).iter() {
                acc.add_term(m2.clone(), c1 * c2);
            }
        }
        for (mr, cr) in self.rels[k][g].terms() {
            for (m2, c2) in self.mono_mul(&prefix, mr).terms() {
                acc.add_term(m2.clone(), cr * c2);
            }
        }
        let out: Product = Arc::new(acc.terms().map(|(m, c)| (m.clone(), c.clone())).collect());
        self.cache.lock().expect("cache lock").insert(key, out.clone());
        out
    }

    /// Product of two normal-ordered monomials.
    pub fn mono_mul(&self, a: &Mono, b: &Mono) -> PbwElement {
        let mut acc = PbwElement::monomial(a.clone(), Series::one(self.order));
        for (g, &e) in b.iter().enumerate() {
            for _ in 0..e {
                acc = self.mul_elem_gen(&acc, g);
            }
        }
        acc
    }

    pub fn mul_elem_gen(&self, a: &PbwElement, g: usize) -> PbwElement {
        let mut out = PbwElement::zero(self.order);
        for (m, c) in a.terms() {
            for (m2, c2) in self.mul_gen(m, g).iter() {
                out.add_term(m2.clone(), c * c2);
            }
        }
        out
    }

    pub fn mul(&self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        let mut out = PbwElement::zero(self.order);
        for (mb, cb) in b.terms() {
            let vb = cb.valuation().unwrap_or(0);
            for (ma, ca) in a.terms() {
                if ca.valuation().unwrap_or(0) + vb > self.order {
                    continue;
                }
                let c = ca * cb;
                for (m, cm) in self.mono_mul(ma, mb).terms() {
                    out.add_term(m.clone(), &c * cm);
                }
            }
        }
        out
    }

    pub fn product(&self, factors: &[PbwElement]) -> PbwElement {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, a: &PbwElement, k: u32) -> PbwElement {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    pub fn commutator(&self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    /// Normal form of a word of generators, by the memoized engine.
    pub fn word(&self, letters: &[usize]) -> PbwElement {
        letters.iter().fold(self.one(), |acc, &g| self.mul_elem_gen(&acc, g))
    }

    /// `sum_k a^k / k!`; `a` must have positive z-valuation.
    pub fn exp(&self, a: &PbwElement) -> Result<PbwElement, PbwError> {
        Ok(exp_by_powers(a, self.one(), |x, y| self.mul(x, y))?)
    }
}

fn with_bump(m: &Mono, g: usize, delta: i32) -> Mono {
    let mut out = m.clone();
    out[g] = (out[g] as i32 + delta) as u32;
    out
}

impl std::fmt::Debug for NcAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("NcAlgebra")
            .field("names", &self.names)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}
