//! Exact quantum coordinate algebra generated by `m, a-, a+` and the
//! invertible group-like `E = e^n`, normal order `m^a a-^b a+^c E^d`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::math::Poly;

/// Letters of a coordinate word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QGen {
    M,
    Am,
    Ap,
    E,
    EInv,
}

impl QGen {
    pub const ALL: [QGen; 5] = [QGen::M, QGen::Am, QGen::Ap, QGen::E, QGen::EInv];

    pub fn name(self) -> &'static str {
        match self {
            QGen::M => "m",
            QGen::Am => "a-",
            QGen::Ap => "a+",
            QGen::E => "E",
            QGen::EInv => "E^-1",
        }
    }
}

/// `m^m a-^am a+^ap E^e`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QMono {
    pub m: u32,
    pub am: u32,
    pub ap: u32,
    pub e: i32,
}

impl QMono {
    pub const ONE: QMono = QMono { m: 0, am: 0, ap: 0, e: 0 };

    pub fn new(m: u32, am: u32, ap: u32, e: i32) -> Self {
        QMono { m, am, ap, e }
    }

    pub fn of(g: QGen) -> Self {
        match g {
            QGen::M => QMono::new(1, 0, 0, 0),
            QGen::Am => QMono::new(0, 1, 0, 0),
            QGen::Ap => QMono::new(0, 0, 1, 0),
            QGen::E => QMono::new(0, 0, 0, 1),
            QGen::EInv => QMono::new(0, 0, 0, -1),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == QMono::ONE
    }

    fn with_e(mut self, e: i32) -> Self {
        self.e = e;
        self
    }
}

impl fmt::Display for QMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, k) in [("m", self.m), ("a-", self.am), ("a+", self.ap)] {
            match k {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{k}")),
            }
        }
        match self.e {
            0 => {}
            1 => parts.push("E".into()),
            e => parts.push(format!("E^{e}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A linear combination of normal monomials with polynomial coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct QElem {
    terms: BTreeMap<QMono, Poly>,
}

impl QElem {
    pub fn zero() -> Self {
        QElem::default()
    }

    pub fn one() -> Self {
        QElem::monomial(QMono::ONE, Poly::one())
    }

    pub fn scalar(c: Poly) -> Self {
        QElem::monomial(QMono::ONE, c)
    }

    pub fn gen(g: QGen) -> Self {
        QElem::monomial(QMono::of(g), Poly::one())
    }

    pub fn monomial(m: QMono, c: Poly) -> Self {
        let mut e = QElem::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QMono, &Poly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &QMono) -> Poly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: QMono, c: Poly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &QElem) -> QElem {
        let mut out = self.clone();
        out.add_scaled(other, &Poly::one());
        out
    }

    pub fn add_scaled(&mut self, other: &QElem, c: &Poly) {
        for (m, v) in &other.terms {
            self.add_term(*m, v * c);
        }
    }

    pub fn sub(&self, other: &QElem) -> QElem {
        self.add(&other.scale(&Poly::integer(-1)))
    }

    pub fn scale(&self, c: &Poly) -> QElem {
        self.map_coeffs(|v| v * c)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> QElem {
        let mut out = QElem::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }
}

impl fmt::Display for QElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    format!("({c})")
                } else if c.is_one() {
                    m.to_string()
                } else {
                    format!("({c})*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for QElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The coordinate algebra with deformation parameter `z` (a polynomial,
/// normally the symbol `z`; zero gives the commutative limit).
///
/// `a+ a- = a- a+ - z a-`, `a- m = m a- - z a-^2`, `a+ m = m a+ + z a- a+`,
/// `E^d a+ = (a+ + d z (E - 1)) E^d`, `E^d m = (m + d z a-) E^d`,
/// `E a- = a- E`.
pub struct QCoordAlgebra {
    z: Poly,
    ladder: bool,
    cache: Mutex<HashMap<(QMono, QGen), QElem>>,
}

impl fmt::Debug for QCoordAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QCoordAlgebra")
            .field("z", &self.z)
            .field("ladder", &self.ladder)
            .finish()
    }
}

impl Default for QCoordAlgebra {
    fn default() -> Self {
        QCoordAlgebra::new()
    }
}

impl QCoordAlgebra {
    pub fn new() -> Self {
        QCoordAlgebra::with_parameter(Poly::var("z"))
    }

    pub fn with_parameter(z: Poly) -> Self {
        QCoordAlgebra {
            z,
            ladder: true,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// The same algebra with `a+` and `a-` commuting.
    pub fn without_ladder_relation() -> Self {
        QCoordAlgebra {
            ladder: false,
            ..QCoordAlgebra::new()
        }
    }

    pub fn parameter(&self) -> &Poly {
        &self.z
    }

    /// `x_j x_i - x_i x_j` for letters `j > i` among `m < a- < a+`.
    fn rel(&self, j: QGen, i: QGen) -> QElem {
        let z = &self.z;
        match (j, i) {
            (QGen::Ap, QGen::Am) if self.ladder => QElem::monomial(QMono::of(QGen::Am), -z),
            (QGen::Ap, QGen::Am) => QElem::zero(),
            (QGen::Am, QGen::M) => QElem::monomial(QMono::new(0, 2, 0, 0), -z),
            (QGen::Ap, QGen::M) => QElem::monomial(QMono::new(0, 1, 1, 0), z.clone()),
            _ => unreachable!("relation requested out of order"),
        }
    }

    /// `mono * g` in normal order.
    pub fn mono_gen(&self, mono: &QMono, g: QGen) -> QElem {
        match g {
            QGen::E => return QElem::monomial(mono.with_e(mono.e + 1), Poly::one()),
            QGen::EInv => return QElem::monomial(mono.with_e(mono.e - 1), Poly::one()),
            _ => {}
        }
        if let Some(hit) = self.cache.lock().expect("cache").get(&(*mono, g)) {
            return hit.clone();
        }
        let out = if mono.e != 0 {
            let d = mono.e;
            let p = mono.with_e(0);
            let dz = self.z.scale(&crate::math::int(d as i64));
            let mut acc = self.shift_e(&self.mono_gen(&p, g), d);
            match g {
                QGen::Ap => {
                    acc.add_term(p.with_e(d + 1), dz.clone());
                    acc.add_term(p.with_e(d), -&dz);
                }
                QGen::M => {
                    acc = acc.add(&self.shift_e(&self.mono_gen(&p, QGen::Am), d).scale(&dz));
                }
                _ => {}
            }
            acc
        } else {
            let last = if mono.ap > 0 {
                Some(QGen::Ap)
            } else if mono.am > 0 {
                Some(QGen::Am)
            } else if mono.m > 0 {
                Some(QGen::M)
            } else {
                None
            };
            match last {
                Some(l) if l > g => {
                    let mut p = *mono;
                    match l {
                        QGen::Ap => p.ap -= 1,
                        QGen::Am => p.am -= 1,
                        _ => p.m -= 1,
                    }
                    let left = self.mul_elem_gen(&self.mono_gen(&p, g), l);
                    let right = self.mul(&QElem::monomial(p, Poly::one()), &self.rel(l, g));
                    left.add(&right)
                }
                _ => {
                    let mut m = *mono;
                    match g {
                        QGen::Ap => m.ap += 1,
                        QGen::Am => m.am += 1,
                        _ => m.m += 1,
                    }
                    QElem::monomial(m, Poly::one())
                }
            }
        };
        self.cache.lock().expect("cache").insert((*mono, g), out.clone());
        out
    }

    fn shift_e(&self, e: &QElem, d: i32) -> QElem {
        let mut out = QElem::zero();
        for (m, c) in e.terms() {
            out.add_term(m.with_e(m.e + d), c.clone());
        }
        out
    }

    pub fn mul_elem_gen(&self, a: &QElem, g: QGen) -> QElem {
        let mut out = QElem::zero();
        for (m, c) in a.terms() {
            out.add_scaled(&self.mono_gen(m, g), c);
        }
        out
    }

    fn letters(m: &QMono) -> Vec<QGen> {
        let mut w = Vec::new();
        w.extend(std::iter::repeat_n(QGen::M, m.m as usize));
        w.extend(std::iter::repeat_n(QGen::Am, m.am as usize));
        w.extend(std::iter::repeat_n(QGen::Ap, m.ap as usize));
        let eg = if m.e >= 0 { QGen::E } else { QGen::EInv };
        w.extend(std::iter::repeat_n(eg, m.e.unsigned_abs() as usize));
        w
    }

    pub fn mono_mul(&self, a: &QMono, b: &QMono) -> QElem {
        let mut acc = QElem::monomial(*a, Poly::one());
        for g in QCoordAlgebra::letters(b) {
            acc = self.mul_elem_gen(&acc, g);
        }
        acc
    }

    pub fn mul(&self, a: &QElem, b: &QElem) -> QElem {
        let mut out = QElem::zero();
        for (mb, cb) in b.terms() {
            for (ma, ca) in a.terms() {
                out.add_scaled(&self.mono_mul(ma, mb), &(ca * cb));
            }
        }
        out
    }

    pub fn product(&self, factors: &[&QElem]) -> QElem {
        factors.iter().fold(QElem::one(), |acc, f| self.mul(&acc, f))
    }

    pub fn commutator(&self, a: &QElem, b: &QElem) -> QElem {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    /// Normal form of a word, multiplying left to right.
    pub fn word(&self, letters: &[QGen]) -> QElem {
        letters.iter().fold(QElem::one(), |acc, &g| self.mul_elem_gen(&acc, g))
    }

    /// Normal form of a word, multiplying right to left.
    pub fn word_from_right(&self, letters: &[QGen]) -> QElem {
        letters.iter().rev().fold(QElem::one(), |acc, &g| self.mul(&QElem::gen(g), &acc))
    }
}

/// Tensor powers of the coordinate algebra.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct QTensor {
    terms: BTreeMap<Vec<QMono>, Poly>,
}

impl QTensor {
    pub fn zero() -> Self {
        QTensor::default()
    }

    pub fn one(arity: usize) -> Self {
        QTensor::from_slots(&vec![QElem::one(); arity])
    }

    pub fn from_slots(slots: &[QElem]) -> Self {
        let mut acc: Vec<(Vec<QMono>, Poly)> = vec![(Vec::new(), Poly::one())];
        for s in slots {
            let mut next = Vec::new();
            for (k, c) in &acc {
                for (m, cm) in s.terms() {
                    let mut k2 = k.clone();
                    k2.push(*m);
                    next.push((k2, c * cm));
                }
            }
            acc = next;
        }
        let mut out = QTensor::zero();
        for (k, c) in acc {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<QMono>, &Poly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, k: Vec<QMono>, c: Poly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &QTensor) -> QTensor {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &QTensor) -> QTensor {
        self.add(&other.scale(&Poly::integer(-1)))
    }

    pub fn scale(&self, c: &Poly) -> QTensor {
        let mut out = QTensor::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// Replaces slot `s` by `f(monomial)`, a tensor of any arity.
    pub fn map_slot(&self, s: usize, f: impl Fn(&QMono) -> QTensor) -> QTensor {
        let mut out = QTensor::zero();
        for (k, c) in &self.terms {
            for (ki, ci) in f(&k[s]).terms() {
                let mut idx = k[..s].to_vec();
                idx.extend(ki.iter().copied());
                idx.extend(k[s + 1..].iter().copied());
                out.add_term(idx, c * ci);
            }
        }
        out
    }

    /// Reads a single-slot tensor as an element.
    pub fn to_element(&self) -> QElem {
        let mut out = QElem::zero();
        for (k, c) in &self.terms {
            out.add_term(k[0], c.clone());
        }
        out
    }
}

impl QCoordAlgebra {
    pub fn tensor_mul(&self, a: &QTensor, b: &QTensor) -> QTensor {
        let mut out = QTensor::zero();
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                let slots: Vec<QElem> = ka.iter().zip(kb).map(|(x, y)| self.mono_mul(x, y)).collect();
                let c = ca * cb;
                for (k, v) in QTensor::from_slots(&slots).terms {
                    out.add_term(k, &v * &c);
                }
            }
        }
        out
    }
}
