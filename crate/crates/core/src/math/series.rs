//! Truncated power series in the deformation parameter.
//!
//! A `Series` carries its truncation order `N` and the coefficients of
//! `z^0 .. z^N`, each a `Poly` in the remaining symbols. All arithmetic is
//! performed in `Poly[z] / (z^(N+1))`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::poly::{Monomial, Poly, Symbol};
use super::rat::{factorial, Rat};
use super::MathError;

pub const DEFAULT_ORDER: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    order: usize,
    // Length at most order + 1, trailing zeros trimmed.
    coeffs: Vec<Poly>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            order,
            coeffs: Vec::new(),
        }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Poly::one(), order)
    }

    pub fn constant(p: Poly, order: usize) -> Self {
        Series::from_coeffs(vec![p], order)
    }

    pub fn rational(c: Rat, order: usize) -> Self {
        Series::constant(Poly::constant(c), order)
    }

    /// `c * z^k`, or zero if `k` exceeds the order.
    pub fn monomial(c: Poly, k: usize, order: usize) -> Self {
        if k > order {
            return Series::zero(order);
        }
        let mut coeffs = vec![Poly::zero(); k];
        coeffs.push(c);
        Series::from_coeffs(coeffs, order)
    }

    pub fn z(order: usize) -> Self {
        Series::monomial(Poly::one(), 1, order)
    }

    pub fn from_coeffs(mut coeffs: Vec<Poly>, order: usize) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        Series { order, coeffs }
    }

    /// Interprets `p` as a polynomial in `z` and truncates it.
    pub fn from_poly_in(p: &Poly, z: &Symbol, order: usize) -> Self {
        Series::from_coeffs(p.coefficients_in(z), order)
    }

    /// The truncated series as a polynomial in `z`.
    pub fn to_poly_in(&self, z: &Symbol) -> Poly {
        let mut acc = Poly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let zk = if k == 0 {
                Monomial::one()
            } else {
                Poly::symbol(z).pow(k as u32).terms()[0].0.clone()
            };
            acc += &c.mul_monomial(&zk, &Rat::one());
        }
        acc
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn coeff(&self, k: usize) -> Poly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient; `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn constant_term(&self) -> Poly {
        self.coeff(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn with_order(&self, order: usize) -> Series {
        Series::from_coeffs(self.coeffs.clone(), order)
    }

    pub fn scale(&self, c: &Rat) -> Series {
        if c.is_zero() {
            return Series::zero(self.order);
        }
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> Series {
        Series::from_coeffs(self.coeffs.iter().map(|c| c * p).collect(), self.order)
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Series {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Poly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series::from_coeffs(coeffs, self.order)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> Series {
        Series::from_coeffs(self.coeffs.iter().map(f).collect(), self.order)
    }

    /// `exp(self)` for a series without constant term.
    pub fn exp(&self) -> Result<Series, MathError> {
        exp_by_powers(self, Series::one(self.order), |a, b| a * b)
    }

    /// Multiplicative inverse; requires an invertible rational constant term.
    pub fn inverse(&self) -> Result<Series, MathError> {
        let c0 = self
            .constant_term()
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or(MathError::NotInvertible)?;
        let inv0 = Rat::one() / c0;
        let mut out = vec![Poly::constant(inv0.clone())];
        for k in 1..=self.order {
            let mut acc = Poly::zero();
            for j in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                acc += &(&self.coeffs[j] * &out[k - j]);
            }
            out.push(acc.scale(&-&inv0));
        }
        Ok(Series::from_coeffs(out, self.order))
    }

    fn check_order(&self, other: &Series) {
        debug_assert_eq!(self.order, other.order, "mixed truncation orders");
    }
}

/// `sum_k a^k / k!` for any `a` whose powers raise the z-valuation.
///
/// Shared by series, noncommutative and tensor exponentials.
pub(crate) fn exp_by_powers<T: Clone + HasValuation>(
    a: &T,
    one: T,
    mul: impl Fn(&T, &T) -> T,
) -> Result<T, MathError> {
    match a.valuation() {
        None => return Ok(one),
        Some(0) => return Err(MathError::Valuation),
        Some(_) => {}
    }
    let mut acc = one.clone();
    let mut power = one;
    let mut k = 0u32;
    loop {
        k += 1;
        power = mul(&power, a);
        if power.valuation().is_none() {
            break;
        }
        acc = T::add_scaled(&acc, &power, &(Rat::one() / factorial(k)));
    }
    Ok(acc)
}

pub(crate) trait HasValuation {
    fn valuation(&self) -> Option<usize>;
    fn add_scaled(acc: &Self, x: &Self, c: &Rat) -> Self;
}

impl HasValuation for Series {
    fn valuation(&self) -> Option<usize> {
        Series::valuation(self)
    }
    fn add_scaled(acc: &Self, x: &Self, c: &Rat) -> Self {
        acc + &x.scale(c)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "O(z^{})", self.order + 1);
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        write!(f, " + O(z^{})", self.order + 1)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> Add<&'a Series> for &Series {
    type Output = Series;
    fn add(self, rhs: &'a Series) -> Series {
        self.check_order(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Series::from_coeffs(coeffs, self.order)
    }
}

impl<'a> Sub<&'a Series> for &Series {
    type Output = Series;
    fn sub(self, rhs: &'a Series) -> Series {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Series> for &Series {
    type Output = Series;
    fn mul(self, rhs: &'a Series) -> Series {
        self.check_order(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Series::zero(self.order);
        }
        let n = (self.coeffs.len() + rhs.coeffs.len() - 1).min(self.order + 1);
        let mut coeffs = vec![Poly::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Series::from_coeffs(coeffs, self.order)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl AddAssign<&Series> for Series {
    fn add_assign(&mut self, rhs: &Series) {
        if !rhs.is_zero() {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Series> for Series {
    fn sub_assign(&mut self, rhs: &Series) {
        if !rhs.is_zero() {
            *self = &*self - rhs;
        }
    }
}
