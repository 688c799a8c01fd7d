//! Sparse multivariate polynomials over `Rat` in named symbols.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rat::{fmt_rat, int, Rat};
use super::MathError;

/// A named polynomial variable. Ordered by name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Power product of symbols, kept sorted by symbol with positive exponents.
///
/// The ordering is graded lexicographic (symbols earlier in name order are the
/// larger variables), which is a monomial order and drives exact division.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(s: Symbol) -> Self {
        Monomial(vec![(s, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, s: &Symbol) -> u32 {
        self.0
            .iter()
            .find(|(t, _)| t == s)
            .map_or(0, |(_, e)| *e)
    }

    pub fn factors(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for (s, e) in &self.0 {
            if j < other.0.len() && &other.0[j].0 == s {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((s.clone(), e - f)),
                }
            } else if j < other.0.len() && other.0[j].0 < *s {
                return None;
            } else {
                out.push((s.clone(), *e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Removes `s` from the monomial, returning its exponent and the rest.
    pub fn split_off(&self, s: &Symbol) -> (u32, Monomial) {
        let mut rest = Vec::with_capacity(self.0.len());
        let mut e = 0;
        for (t, k) in &self.0 {
            if t == s {
                e = *k;
            } else {
                rest.push((t.clone(), *k));
            }
        }
        (e, Monomial(rest))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                match a.0.cmp(&b.0) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match a.1.cmp(&b.1) {
                        Ordering::Equal => {}
                        ord => return ord,
                    },
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (s, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial with exact rational coefficients. Terms are sorted ascending
/// in the monomial order and no zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Rat)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn integer(n: i64) -> Self {
        Poly::constant(int(n))
    }

    pub fn var(name: &str) -> Self {
        Poly::term(Rat::one(), Monomial::var(Symbol::new(name)))
    }

    pub fn symbol(s: &Symbol) -> Self {
        Poly::term(Rat::one(), Monomial::var(s.clone()))
    }

    pub fn term(c: Rat, m: Monomial) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, zero) terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut acc: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rat::zero) += c;
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one())
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms
            .binary_search_by(|(t, _)| t.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rat::zero())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&(Monomial, Rat)> {
        self.terms.last()
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = self
            .terms
            .iter()
            .flat_map(|(m, _)| m.0.iter().map(|(s, _)| s.clone()))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        // Multiplying by a fixed monomial preserves the order.
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, k)| (t.mul(m), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient so that equal-up-to-scalar
    /// polynomials get the same representative.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => self.scale(&(Rat::one() / c)),
        }
    }

    /// Returns `r` with `self == r * q`, or `NotMultiple`.
    pub fn exact_div(&self, q: &Poly) -> Result<Poly, MathError> {
        let (lm, lc) = q.leading().ok_or(MathError::DivisionByZero)?.clone();
        if let Some(c) = q.as_constant() {
            return Ok(self.scale(&(Rat::one() / c)));
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading().cloned() {
            let t = m.div(&lm).ok_or(MathError::NotMultiple)?;
            let k = c / &lc;
            rem -= &q.mul_monomial(&t, &k);
            quot.push((t, k));
        }
        Ok(Poly::from_terms(quot))
    }

    pub fn substitute(&self, s: &Symbol, value: &Poly) -> Poly {
        let mut powers: Vec<Poly> = vec![Poly::one()];
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(s);
            while powers.len() <= e as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            acc += &powers[e as usize].mul_monomial(&rest, c);
        }
        acc
    }

    /// Applies several substitutions simultaneously.
    pub fn substitute_all(&self, subs: &[(Symbol, Poly)]) -> Poly {
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            let mut rest = Vec::new();
            for (s, e) in m.factors() {
                match subs.iter().find(|(t, _)| t == s) {
                    Some((_, v)) => term = &term * &v.pow(*e),
                    None => rest.push((s.clone(), *e)),
                }
            }
            acc += &term.mul_monomial(&Monomial(rest), &Rat::one());
        }
        acc
    }

    pub fn derivative(&self, s: &Symbol) -> Poly {
        Poly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let (e, rest) = m.split_off(s);
            if e == 0 {
                return None;
            }
            let m = if e > 1 {
                rest.mul(&Monomial(vec![(s.clone(), e - 1)]))
            } else {
                rest
            };
            Some((m, c * Rat::from_integer(e.into())))
        }))
    }

    /// Coefficients with respect to one symbol: `self = sum_k out[k] * s^k`.
    pub fn coefficients_in(&self, s: &Symbol) -> Vec<Poly> {
        let mut out: Vec<Vec<(Monomial, Rat)>> = Vec::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(s);
            let e = e as usize;
            if out.len() <= e {
                out.resize_with(e + 1, Vec::new);
            }
            out[e].push((rest, c.clone()));
        }
        out.into_iter().map(Poly::from_terms).collect()
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Poly { terms: out }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest terms first reads naturally.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                f.write_str(&fmt_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rat(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl From<Rat> for Poly {
    fn from(c: Rat) -> Self {
        Poly::constant(c)
    }
}

impl<'a> Add<&'a Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_monomial(m, c);
        }
        let mut acc: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rat::zero) += ca * cb;
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        if rhs.is_zero() {
            return;
        }
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        if rhs.is_zero() {
            return;
        }
        *self = self.merge(rhs, true);
    }
}

/// Principal-ideal membership: the quotient `p / q` if `q` divides `p`.
pub fn reduce_by(p: &Poly, q: &Poly) -> Result<Poly, MathError> {
    if q.is_zero() {
        return Err(MathError::DivisionByZero);
    }
    p.exact_div(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::parse_poly;
    use crate::math::rat::rat;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let a = p("a1 + a2");
        let b = p("a1 - a2");
        assert_eq!(&a * &b, p("a1^2 - a2^2"));
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!((&a + &b).to_string(), "2*a1");
        assert_eq!(a.pow(3), p("a1^3 + 3*a1^2*a2 + 3*a1*a2^2 + a2^3"));
    }

    #[test]
    fn reduce_by_examples() {
        let q = p("4*a1*a6 + a4^2");
        assert_eq!(reduce_by(&q, &q).unwrap(), Poly::one());
        assert_eq!(reduce_by(&Poly::zero(), &q).unwrap(), Poly::zero());
        let prod = &q * &p("a3 - 1/2*a5");
        assert_eq!(reduce_by(&prod, &q).unwrap(), p("a3 - 1/2*a5"));
        assert!(matches!(
            reduce_by(&p("a1*a6"), &q),
            Err(MathError::NotMultiple)
        ));
        assert!(matches!(
            reduce_by(&q, &Poly::zero()),
            Err(MathError::DivisionByZero)
        ));
    }

    #[test]
    fn substitution_and_derivative() {
        let f = p("a1^2*a2 + 3*a2");
        let g = f.substitute(&Symbol::new("a1"), &p("a3 + 1"));
        assert_eq!(g, p("a3^2*a2 + 2*a3*a2 + 4*a2"));
        assert_eq!(f.derivative(&Symbol::new("a1")), p("2*a1*a2"));
        let both = f.substitute_all(&[
            (Symbol::new("a1"), p("a2")),
            (Symbol::new("a2"), p("a1")),
        ]);
        assert_eq!(both, p("a2^2*a1 + 3*a1"));
    }

    #[test]
    fn coefficients_in_symbol() {
        let f = p("z^2*b + 3*z + b - 1");
        let cs = f.coefficients_in(&Symbol::new("z"));
        assert_eq!(cs, vec![p("b - 1"), p("3"), p("b")]);
    }

    #[test]
    fn monic_normalizes_scalars() {
        assert_eq!(p("-2*a1*a3").monic(), p("a1*a3"));
        assert_eq!(p("3*a1 + 6").monic(), p("a1 + 2"));
        assert_eq!(Poly::constant(rat(3, 4)).monic(), Poly::one());
    }

    #[test]
    fn monomial_order_is_multiplicative() {
        let x = p("a1").terms()[0].0.clone();
        let y = p("a2^2").terms()[0].0.clone();
        let w = p("a1*a3").terms()[0].0.clone();
        assert_eq!(x.cmp(&y), Ordering::Less);
        assert_eq!(x.mul(&w).cmp(&y.mul(&w)), Ordering::Less);
        assert_eq!(y.div(&x), None);
        assert_eq!(x.mul(&y).div(&y), Some(x));
    }
}
