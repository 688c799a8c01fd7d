use std::collections::BTreeMap;

use crate::math::{HasValuation, Poly, Rat, Series};

/// Exponent vector of a normal-ordered monomial `x_0^e0 x_1^e1 ...`.
pub type Mono = Vec<u32>;

/// A linear combination of normal-ordered monomials with truncated series
/// coefficients. All coefficients share one truncation order.
#[derive(Clone, PartialEq, Eq)]
pub struct PbwElement {
    order: usize,
    terms: BTreeMap<Mono, Series>,
}

impl PbwElement {
    pub fn zero(order: usize) -> Self {
        PbwElement {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, order: usize) -> Self {
        PbwElement::monomial(vec![0; n], Series::one(order))
    }

    pub fn scalar(n: usize, c: Series) -> Self {
        PbwElement::monomial(vec![0; n], c)
    }

    pub fn generator(n: usize, g: usize, order: usize) -> Self {
        let mut m = vec![0; n];
        m[g] = 1;
        PbwElement::monomial(m, Series::one(order))
    }

    pub fn monomial(m: Mono, c: Series) -> Self {
        let mut e = PbwElement::zero(c.order());
        e.add_term(m, c);
        e
    }

    pub fn from_terms(order: usize, terms: impl IntoIterator<Item = (Mono, Series)>) -> Self {
        let mut e = PbwElement::zero(order);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Series)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[u32]) -> Series {
        self.terms.get(m).cloned().unwrap_or_else(|| Series::zero(self.order))
    }

    pub fn add_term(&mut self, m: Mono, c: Series) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &PbwElement, c: &Series) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn add(&self, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PbwElement) -> PbwElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PbwElement {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, c: &Series) -> PbwElement {
        self.map_coeffs(|x| x * c)
    }

    pub fn scale_rat(&self, c: &Rat) -> PbwElement {
        self.map_coeffs(|x| x.scale(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Series) -> Series) -> PbwElement {
        PbwElement::from_terms(self.order, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Smallest z-power among the coefficients.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.values().filter_map(Series::valuation).min()
    }

    /// The `z^k` coefficient of every term, as an element with polynomial
    /// (z-free) coefficients.
    pub fn z_coefficient(&self, k: usize) -> PbwElement {
        self.map_coeffs(|c| Series::constant(c.coeff(k), self.order))
    }

    /// Substitutes `value` for a scalar symbol in every coefficient.
    pub fn substitute(&self, s: &crate::math::Symbol, value: &Poly) -> PbwElement {
        self.map_coeffs(|c| c.map_coeffs(|p| p.substitute(s, value)))
    }

    /// Number of nonzero scalar coefficients, counting every z-power.
    pub fn residual_size(&self) -> usize {
        self.terms
            .values()
            .map(|c| c.coeffs().iter().filter(|p| !p.is_zero()).count())
            .sum()
    }

    pub fn fmt_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                let word = fmt_mono(m, names);
                if word.is_empty() {
                    format!("[{c}]")
                } else {
                    format!("[{c}] {word}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub(crate) fn fmt_mono(m: &[u32], names: &[&str]) -> String {
    m.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(g, &e)| if e == 1 { names[g].to_string() } else { format!("{}^{e}", names[g]) })
        .collect::<Vec<_>>()
        .join(" ")
}

impl std::fmt::Debug for PbwElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = (0..self.terms.keys().next().map_or(0, Vec::len))
            .map(|g| format!("x{g}"))
            .collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.fmt_with(&refs))
    }
}

impl HasValuation for PbwElement {
    fn valuation(&self) -> Option<usize> {
        PbwElement::valuation(self)
    }
    fn add_scaled(acc: &Self, x: &Self, c: &Rat) -> Self {
        acc.add(&x.scale_rat(c))
    }
}
