//! Tensor powers of a Lie algebra with polynomial coefficients, and the
//! canonical wedge forms used for cocommutators, r-matrices and Schouten
//! brackets.
//!
//! Wedges are normalized without factorials: `x^y = x(x)y - y(x)x` and
//! `x^y^w = sum over permutations of sign * (permuted x(x)y(x)w)`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{LieAlgebra, LieError};
use crate::math::{rat, Poly};

/// Element of `g^{(x) k}` in the basis `X_{i1} (x) ... (x) X_{ik}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    arity: usize,
    terms: BTreeMap<Vec<usize>, Poly>,
}

impl Tensor {
    pub fn zero(arity: usize) -> Self {
        Tensor {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(index: &[usize]) -> Self {
        let mut t = Tensor::zero(index.len());
        t.add_term(index.to_vec(), Poly::one());
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, index: &[usize]) -> Poly {
        self.terms.get(index).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, index: Vec<usize>, c: Poly) {
        debug_assert_eq!(index.len(), self.arity);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(index) {
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

    pub fn add(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.scale(&Poly::integer(-1)))
    }

    pub fn scale(&self, c: &Poly) -> Tensor {
        let mut out = Tensor::zero(self.arity);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> Tensor {
        let mut out = Tensor::zero(self.arity);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), f(v));
        }
        out
    }

    pub fn tensor(&self, other: &Tensor) -> Tensor {
        let mut out = Tensor::zero(self.arity + other.arity);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                out.add_term(idx, ca * cb);
            }
        }
        out
    }

    /// Slot `s` of the result takes slot `perm[s]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        let mut out = Tensor::zero(self.arity);
        for (k, c) in &self.terms {
            out.add_term(perm.iter().map(|&p| k[p]).collect(), c.clone());
        }
        out
    }

    /// The flip `sigma(x (x) y) = y (x) x` on 2-tensors.
    pub fn flip(&self) -> Tensor {
        self.permute(&[1, 0])
    }

    /// Applies a linear map to one slot. `image[i]` is the image of `X_i`.
    pub fn map_slot(&self, slot: usize, image: &[Vec<Poly>]) -> Tensor {
        let mut out = Tensor::zero(self.arity);
        for (k, c) in &self.terms {
            for (j, cj) in image[k[slot]].iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let mut idx = k.clone();
                idx[slot] = j;
                out.add_term(idx, c * cj);
            }
        }
        out
    }

    /// Applies the same linear map to every slot.
    pub fn map_all(&self, image: &[Vec<Poly>]) -> Tensor {
        (0..self.arity).fold(self.clone(), |t, s| t.map_slot(s, image))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let k = self.arity;
        for a in 0..k {
            for b in a + 1..k {
                let mut perm: Vec<usize> = (0..k).collect();
                perm.swap(a, b);
                if !self.add(&self.permute(&perm)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(k, c)| {
                let basis: Vec<&str> = k.iter().map(|&i| names[i].as_str()).collect();
                format!("({c}) {}", basis.join("(x)"))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `sum_slots ad_{X_x}` acting on a tensor of any arity.
pub fn adjoint_action(alg: &LieAlgebra, x: usize, t: &Tensor) -> Result<Tensor, LieError> {
    let n = alg.dim();
    if x >= n {
        return Err(LieError::IndexOutOfRange(x));
    }
    if let Some(bad) = t.terms().flat_map(|(k, _)| k.iter()).find(|&&i| i >= n) {
        return Err(LieError::IndexOutOfRange(*bad));
    }
    let mut out = Tensor::zero(t.arity());
    for (k, c) in t.terms() {
        for slot in 0..k.len() {
            for (m, cm) in alg.bracket(x, k[slot]).iter().enumerate() {
                if cm.is_zero() {
                    continue;
                }
                let mut idx = k.clone();
                idx[slot] = m;
                out.add_term(idx, c.scale(cm));
            }
        }
    }
    Ok(out)
}

/// Element of `Lambda^2 g`, coefficients on `X_i ^ X_j` with `i < j`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Wedge2 {
    coeffs: BTreeMap<(usize, usize), Poly>,
}

impl Wedge2 {
    pub fn zero() -> Self {
        Wedge2::default()
    }

    /// `c * X_i ^ X_j` for any `i, j` (reordered with a sign).
    pub fn term(i: usize, j: usize, c: Poly) -> Self {
        let mut w = Wedge2::zero();
        w.add_term(i, j, c);
        w
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: Poly) {
        if i == j || c.is_zero() {
            return;
        }
        let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -c) };
        let e = self.coeffs.entry(key).or_default();
        *e += &c;
        if e.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> Poly {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coeffs.get(&(i, j)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => -self.coeff(j, i),
            std::cmp::Ordering::Equal => Poly::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Poly)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &Wedge2) -> Wedge2 {
        let mut out = self.clone();
        for (&(i, j), c) in &other.coeffs {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Poly) -> Wedge2 {
        let mut out = Wedge2::zero();
        for (&(i, j), v) in &self.coeffs {
            out.add_term(i, j, v * c);
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> Wedge2 {
        let mut out = Wedge2::zero();
        for (&(i, j), v) in &self.coeffs {
            out.add_term(i, j, f(v));
        }
        out
    }

    pub fn to_tensor(&self) -> Tensor {
        let mut t = Tensor::zero(2);
        for (&(i, j), c) in &self.coeffs {
            t.add_term(vec![i, j], c.clone());
            t.add_term(vec![j, i], -c);
        }
        t
    }

    /// Reads an antisymmetric 2-tensor back into wedge form.
    pub fn from_tensor(t: &Tensor) -> Result<Wedge2, LieError> {
        if t.arity() != 2 || !t.is_antisymmetric() {
            return Err(LieError::NotAntisymmetricTensor);
        }
        let mut w = Wedge2::zero();
        for (k, c) in t.terms() {
            if k[0] < k[1] {
                w.add_term(k[0], k[1], c.clone());
            }
        }
        Ok(w)
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        fmt_wedge(self.coeffs.iter().map(|(&(i, j), c)| (vec![i, j], c)), names)
    }
}

/// Element of `Lambda^3 g`, coefficients on `X_i ^ X_j ^ X_k` with `i < j < k`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Wedge3 {
    coeffs: BTreeMap<(usize, usize, usize), Poly>,
}

impl Wedge3 {
    pub fn zero() -> Self {
        Wedge3::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Poly {
        self.coeffs.get(&(i, j, k)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Poly)> {
        self.coeffs.iter()
    }

    pub fn to_tensor(&self) -> Tensor {
        const PERMS: [([usize; 3], i64); 6] = [
            ([0, 1, 2], 1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([1, 0, 2], -1),
            ([0, 2, 1], -1),
            ([2, 1, 0], -1),
        ];
        let mut t = Tensor::zero(3);
        for (&(i, j, k), c) in &self.coeffs {
            let base = [i, j, k];
            for (p, s) in PERMS {
                t.add_term(p.iter().map(|&x| base[x]).collect(), c.scale(&rat(s, 1)));
            }
        }
        t
    }

    pub fn from_tensor(t: &Tensor) -> Result<Wedge3, LieError> {
        if t.arity() != 3 || !t.is_antisymmetric() {
            return Err(LieError::NotAntisymmetricTensor);
        }
        let mut coeffs = BTreeMap::new();
        for (k, c) in t.terms() {
            if k[0] < k[1] && k[1] < k[2] {
                coeffs.insert((k[0], k[1], k[2]), c.clone());
            }
        }
        Ok(Wedge3 { coeffs })
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        fmt_wedge(
            self.coeffs.iter().map(|(&(i, j, k), c)| (vec![i, j, k], c)),
            names,
        )
    }
}

fn fmt_wedge<'a>(terms: impl Iterator<Item = (Vec<usize>, &'a Poly)>, names: &[String]) -> String {
    let parts: Vec<String> = terms
        .map(|(idx, c)| {
            let basis: Vec<&str> = idx.iter().map(|&i| names[i].as_str()).collect();
            format!("({c}) {}", basis.join("^"))
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// `(t - sigma(t)) / 2` in canonical wedge form.
pub fn skew_part(t: &Tensor) -> Result<Wedge2, LieError> {
    if t.arity() != 2 {
        return Err(LieError::NotAntisymmetricTensor);
    }
    let half = rat(1, 2);
    let skew = t.sub(&t.flip()).map_coeffs(|c| c.scale(&half));
    Wedge2::from_tensor(&skew)
}

/// A linear map `g -> Lambda^2 g`, one wedge per basis element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cocommutator {
    pub images: Vec<Wedge2>,
}

impl Cocommutator {
    pub fn zero(n: usize) -> Self {
        Cocommutator {
            images: vec![Wedge2::zero(); n],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Wedge2::is_zero)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> Cocommutator {
        Cocommutator {
            images: self.images.iter().map(|w| w.map_coeffs(&f)).collect(),
        }
    }

    /// `delta(sum_i x_i X_i)` for coordinates `x`.
    pub fn apply(&self, x: &[Poly]) -> Wedge2 {
        let mut out = Wedge2::zero();
        for (xi, w) in x.iter().zip(&self.images) {
            if !xi.is_zero() {
                out = out.add(&w.scale(xi));
            }
        }
        out
    }

    /// Coordinates in the fixed basis of `Hom(g, Lambda^2 g)`: for each
    /// basis element, the coefficients on `X_i ^ X_j` with `i < j`.
    pub fn coordinates(&self) -> Vec<Poly> {
        let n = self.images.len();
        let mut out = Vec::new();
        for w in &self.images {
            for i in 0..n {
                for j in i + 1..n {
                    out.push(w.coeff(i, j));
                }
            }
        }
        out
    }

    pub fn from_coordinates(n: usize, coords: &[Poly]) -> Cocommutator {
        let mut images = Vec::with_capacity(n);
        let mut it = coords.iter();
        for _ in 0..n {
            let mut w = Wedge2::zero();
            for i in 0..n {
                for j in i + 1..n {
                    w.add_term(i, j, it.next().cloned().unwrap_or_default());
                }
            }
            images.push(w);
        }
        Cocommutator { images }
    }

    pub fn fmt_with(&self, names: &[String]) -> Vec<String> {
        self.images
            .iter()
            .zip(names)
            .map(|(w, n)| format!("delta({n}) = {}", w.fmt_with(names)))
            .collect()
    }
}
