use std::collections::BTreeMap;

use super::algebra::NcAlgebra;
use super::element::{fmt_mono, Mono, PbwElement};
use super::PbwError;
use crate::math::{exp_by_powers, HasValuation, Rat, Series};

/// Element of the k-fold tensor power of an `NcAlgebra`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    arity: usize,
    order: usize,
    terms: BTreeMap<Vec<Mono>, Series>,
}

impl TensorElement {
    pub fn zero(arity: usize, order: usize) -> Self {
        TensorElement {
            arity,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize, n: usize, order: usize) -> Self {
        let mut t = TensorElement::zero(arity, order);
        t.add_term(vec![vec![0; n]; arity], Series::one(order));
        t
    }

    /// `a_0 (x) a_1 (x) ...`.
    pub fn from_slots(order: usize, slots: &[PbwElement]) -> Self {
        let mut acc: Vec<(Vec<Mono>, Series)> = vec![(Vec::new(), Series::one(order))];
        for s in slots {
            let mut next = Vec::new();
            for (prefix, c) in &acc {
                for (m, cm) in s.terms() {
                    if fits(c, cm, order) {
                        let mut idx = prefix.clone();
                        idx.push(m.clone());
                        next.push((idx, c * cm));
                    }
                }
            }
            acc = next;
        }
        let mut t = TensorElement::zero(slots.len(), order);
        for (idx, c) in acc {
            t.add_term(idx, c);
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Mono>, &Series)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &[Mono]) -> Series {
        self.terms.get(idx).cloned().unwrap_or_else(|| Series::zero(self.order))
    }

    pub fn add_term(&mut self, idx: Vec<Mono>, c: Series) {
        debug_assert_eq!(idx.len(), self.arity);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(idx) {
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

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Series) -> TensorElement {
        self.map_coeffs(|x| x * c)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Series) -> Series) -> TensorElement {
        let mut out = TensorElement::zero(self.arity, self.order);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    pub fn valuation(&self) -> Option<usize> {
        self.terms.values().filter_map(Series::valuation).min()
    }

    /// Slot `s` of the result takes slot `perm[s]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> TensorElement {
        let mut out = TensorElement::zero(self.arity, self.order);
        for (k, c) in &self.terms {
            out.add_term(perm.iter().map(|&p| k[p].clone()).collect(), c.clone());
        }
        out
    }

    pub fn flip(&self) -> TensorElement {
        self.permute(&[1, 0])
    }

    /// Places slot `s` of `self` at position `slots[s]` of an `arity`-fold
    /// tensor, filling the others with 1 (e.g. `R -> R_13`).
    pub fn embed(&self, arity: usize, slots: &[usize], n: usize) -> TensorElement {
        let mut out = TensorElement::zero(arity, self.order);
        for (k, c) in &self.terms {
            let mut idx = vec![vec![0; n]; arity];
            for (s, m) in k.iter().enumerate() {
                idx[slots[s]] = m.clone();
            }
            out.add_term(idx, c.clone());
        }
        out
    }

    /// Replaces slot `s` by `f(monomial)`, a tensor of any arity (zero
    /// arity means a scalar).
    pub fn map_slot(&self, slot: usize, f: impl Fn(&Mono) -> TensorElement) -> TensorElement {
        let mut cache: BTreeMap<&Mono, TensorElement> = BTreeMap::new();
        let mut out: Option<TensorElement> = None;
        for (k, c) in &self.terms {
            let img = cache.entry(&k[slot]).or_insert_with(|| f(&k[slot]));
            let acc = out.get_or_insert_with(|| TensorElement::zero(self.arity - 1 + img.arity, self.order));
            for (ki, ci) in &img.terms {
                if !fits(c, ci, self.order) {
                    continue;
                }
                let mut idx: Vec<Mono> = k[..slot].to_vec();
                idx.extend(ki.iter().cloned());
                idx.extend(k[slot + 1..].iter().cloned());
                acc.add_term(idx, c * ci);
            }
        }
        out.unwrap_or_else(|| TensorElement::zero(self.arity, self.order))
    }

    /// The single-slot tensor of an element.
    pub fn from_element(e: &PbwElement) -> TensorElement {
        TensorElement::from_slots(e.order(), std::slice::from_ref(e))
    }

    /// Reads a one-slot tensor back as an element.
    pub fn to_element(&self) -> PbwElement {
        PbwElement::from_terms(self.order, self.terms.iter().map(|(k, c)| (k[0].clone(), c.clone())))
    }

    /// Component of `z^k` with z-free coefficients.
    pub fn z_coefficient(&self, k: usize) -> TensorElement {
        self.map_coeffs(|c| Series::constant(c.coeff(k), self.order))
    }

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
            .map(|(k, c)| {
                let slots: Vec<String> = k
                    .iter()
                    .map(|m| {
                        let w = fmt_mono(m, names);
                        if w.is_empty() { "1".into() } else { w }
                    })
                    .collect();
                format!("[{c}] {}", slots.join(" (x) "))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl std::fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.terms.keys().next().and_then(|k| k.first()).map_or(0, Vec::len);
        let names: Vec<String> = (0..n).map(|g| format!("x{g}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.fmt_with(&refs))
    }
}

impl HasValuation for TensorElement {
    fn valuation(&self) -> Option<usize> {
        TensorElement::valuation(self)
    }
    fn add_scaled(acc: &Self, x: &Self, c: &Rat) -> Self {
        acc.add(&x.map_coeffs(|s| s.scale(c)))
    }
}

fn fits(a: &Series, b: &Series, order: usize) -> bool {
    a.valuation().unwrap_or(0) + b.valuation().unwrap_or(0) <= order
}

impl NcAlgebra {
    pub fn tensor_one(&self, arity: usize) -> TensorElement {
        TensorElement::one(arity, self.dim(), self.order())
    }

    /// Slotwise product in the tensor power.
    pub fn tensor_mul(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        assert_eq!(a.arity, b.arity, "tensor arity mismatch");
        let order = self.order();
        let mut out = TensorElement::zero(a.arity, order);
        for (kb, cb) in &b.terms {
            for (ka, ca) in &a.terms {
                if !fits(ca, cb, order) {
                    continue;
                }
                let mut acc: Vec<(Vec<Mono>, Series)> = vec![(Vec::with_capacity(a.arity), ca * cb)];
                for (ma, mb) in ka.iter().zip(kb) {
                    let prod = if mb.iter().all(|&e| e == 0) {
                        PbwElement::monomial(ma.clone(), Series::one(order))
                    } else if ma.iter().all(|&e| e == 0) {
                        PbwElement::monomial(mb.clone(), Series::one(order))
                    } else {
                        self.mono_mul(ma, mb)
                    };
                    let mut next = Vec::with_capacity(acc.len() * prod.len());
                    for (prefix, c) in &acc {
                        for (m, cm) in prod.terms() {
                            if fits(c, cm, order) {
                                let mut idx = prefix.clone();
                                idx.push(m.clone());
                                next.push((idx, c * cm));
                            }
                        }
                    }
                    acc = next;
                }
                for (idx, c) in acc {
                    out.add_term(idx, c);
                }
            }
        }
        out
    }

    pub fn tensor_product(&self, factors: &[&TensorElement]) -> TensorElement {
        let arity = factors.first().map_or(1, |f| f.arity);
        factors
            .iter()
            .fold(self.tensor_one(arity), |acc, f| self.tensor_mul(&acc, f))
    }

    pub fn tensor_commutator(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        self.tensor_mul(a, b).sub(&self.tensor_mul(b, a))
    }

    pub fn tensor_exp(&self, a: &TensorElement) -> Result<TensorElement, PbwError> {
        Ok(exp_by_powers(a, self.tensor_one(a.arity), |x, y| self.tensor_mul(x, y))?)
    }

    /// Multiplies slots `s` and `s + 1` together.
    pub fn merge_slots(&self, t: &TensorElement, s: usize) -> TensorElement {
        let order = self.order();
        let mut out = TensorElement::zero(t.arity - 1, order);
        for (k, c) in &t.terms {
            for (m, cm) in self.mono_mul(&k[s], &k[s + 1]).terms() {
                let mut idx: Vec<Mono> = k[..s].to_vec();
                idx.push(m.clone());
                idx.extend(k[s + 2..].iter().cloned());
                out.add_term(idx, c * cm);
            }
        }
        out
    }
}
