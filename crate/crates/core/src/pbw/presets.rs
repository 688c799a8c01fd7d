//! Presentations of the oscillator enveloping algebras, classical and
//! deformed, the boson (Weyl) algebra, and the coproducts on them.

use super::algebra::NcAlgebra;
use super::element::{Mono, PbwElement};
use super::tensor::TensorElement;
use crate::math::{factorial, Poly, Rat, Series};

/// Generator indices in normal order `M < A- < A+ < N`.
pub mod osc {
    pub const M: usize = 0;
    pub const AM: usize = 1;
    pub const AP: usize = 2;
    pub const N: usize = 3;
    pub const NAMES: [&str; 4] = ["M", "A-", "A+", "N"];
}

/// Generator indices of the Weyl algebra, normal order `a+ < a-`.
pub mod weyl {
    pub const AP: usize = 0;
    pub const AM: usize = 1;
    pub const NAMES: [&str; 2] = ["a+", "a-"];
}

/// Position of the Lie basis element (order N, A+, A-, M) among the
/// enveloping-algebra generators.
pub fn lie_to_pbw(i: usize) -> usize {
    [osc::N, osc::AP, osc::AM, osc::M][i]
}

pub(crate) fn mono(exps: &[u32]) -> Mono {
    exps.to_vec()
}

fn osc_mono(m: u32, am: u32, ap: u32, n: u32) -> Mono {
    mono(&[m, am, ap, n])
}

/// `c * z^k` where `c = coef^k * w / k!`-style scalars are assembled by
/// callers; a rational times a power of `lambda z`.
fn scaled_z(c: Rat, lambda: &Poly, k: usize, order: usize) -> Series {
    Series::monomial(lambda.pow(k as u32).scale(&c), k, order)
}

/// `sum_{k >= 0} (s lambda z)^k / k! * x^k` with `x` given by its monomial
/// powers and `s = sign`.
pub fn exp_of_generator(n: usize, g: usize, sign: i64, lambda: &Poly, order: usize) -> PbwElement {
    let mut e = PbwElement::zero(order);
    for k in 0..=order {
        let mut m = vec![0u32; n];
        m[g] = k as u32;
        let c = Rat::from_integer(sign.pow(k as u32).into()) / factorial(k as u32);
        e.add_term(m, scaled_z(c, lambda, k, order));
    }
    e
}

/// The oscillator algebra `[N,A+] = A+, [N,A-] = -A-, [A-,A+] = M`.
pub fn classical_h4(order: usize) -> NcAlgebra {
    use osc::*;
    let one = Series::one(order);
    let rels = vec![
        ((N, AP), PbwElement::monomial(osc_mono(0, 0, 1, 0), one.clone())),
        ((N, AM), PbwElement::monomial(osc_mono(0, 1, 0, 0), -&one)),
        ((AP, AM), PbwElement::monomial(osc_mono(1, 0, 0, 0), -&one)),
    ];
    NcAlgebra::new(&NAMES, order, rels).expect("valid relations")
}

/// The deformed algebra `[N,A+] = (e^{zA+}-1)/z`, `[N,A-] = -A-`,
/// `[A-,A+] = M e^{zA+}`, `M` central.
pub fn deformed_h4(order: usize) -> NcAlgebra {
    deformed_h4_scaled(order, &Poly::one())
}

/// The deformed algebra with `z` replaced by `lambda z`.
pub fn deformed_h4_scaled(order: usize, lambda: &Poly) -> NcAlgebra {
    use osc::*;
    let mut n_ap = PbwElement::zero(order);
    let mut ap_am = PbwElement::zero(order);
    for k in 1..=order + 1 {
        let c = Rat::from_integer(1.into()) / factorial(k as u32);
        n_ap.add_term(osc_mono(0, 0, k as u32, 0), scaled_z(c, lambda, k - 1, order));
    }
    for k in 0..=order {
        let c = -Rat::from_integer(1.into()) / factorial(k as u32);
        ap_am.add_term(osc_mono(1, 0, k as u32, 0), scaled_z(c, lambda, k, order));
    }
    let rels = vec![
        ((N, AP), n_ap),
        ((N, AM), PbwElement::monomial(osc_mono(0, 1, 0, 0), -&Series::one(order))),
        ((AP, AM), ap_am),
    ];
    NcAlgebra::new(&NAMES, order, rels).expect("valid relations")
}

/// The standard deformation `[A-,A+] = sinh(zM)/z`, `[N,A±] = ±A±`.
pub fn standard_h4(order: usize) -> NcAlgebra {
    use osc::*;
    let mut ap_am = PbwElement::zero(order);
    for k in (1..=order + 1).step_by(2) {
        let c = -Rat::from_integer(1.into()) / factorial(k as u32);
        ap_am.add_term(osc_mono(k as u32, 0, 0, 0), Series::monomial(Poly::constant(c), k - 1, order));
    }
    let one = Series::one(order);
    let rels = vec![
        ((N, AP), PbwElement::monomial(osc_mono(0, 0, 1, 0), one.clone())),
        ((N, AM), PbwElement::monomial(osc_mono(0, 1, 0, 0), -&one)),
        ((AP, AM), ap_am),
    ];
    NcAlgebra::new(&NAMES, order, rels).expect("valid relations")
}

/// Canonical commutation `[a-, a+] = 1`.
pub fn weyl_algebra(order: usize) -> NcAlgebra {
    let rels = vec![((weyl::AM, weyl::AP), PbwElement::one(2, order))];
    NcAlgebra::new(&weyl::NAMES, order, rels).expect("valid relations")
}

/// Images of the generators under an algebra map `A -> A (x) A`, extended
/// multiplicatively.
#[derive(Clone, Debug)]
pub struct Coproduct {
    pub images: Vec<TensorElement>,
}

impl Coproduct {
    pub fn primitive(alg: &NcAlgebra) -> Coproduct {
        let one = alg.one();
        let images = (0..alg.dim())
            .map(|g| {
                let x = alg.gen(g);
                TensorElement::from_slots(alg.order(), &[one.clone(), x.clone()])
                    .add(&TensorElement::from_slots(alg.order(), &[x, one.clone()]))
            })
            .collect();
        Coproduct { images }
    }

    pub fn apply_mono(&self, alg: &NcAlgebra, m: &Mono) -> TensorElement {
        let mut acc = alg.tensor_one(self.images.first().map_or(2, TensorElement::arity));
        for (g, &e) in m.iter().enumerate() {
            for _ in 0..e {
                acc = alg.tensor_mul(&acc, &self.images[g]);
            }
        }
        acc
    }

    pub fn apply(&self, alg: &NcAlgebra, e: &PbwElement) -> TensorElement {
        let mut out = TensorElement::zero(2, alg.order());
        for (m, c) in e.terms() {
            out = out.add(&self.apply_mono(alg, m).scale(c));
        }
        out
    }
}

fn t2(alg: &NcAlgebra, a: &PbwElement, b: &PbwElement) -> TensorElement {
    TensorElement::from_slots(alg.order(), &[a.clone(), b.clone()])
}

/// `Δ(A+), Δ(M)` primitive, `Δ(N) = 1⊗N + N⊗e^{zA+}`,
/// `Δ(A-) = 1⊗A- + A-⊗e^{zA+} + zN⊗M e^{zA+}`.
pub fn jordanian_coproduct(alg: &NcAlgebra) -> Coproduct {
    jordanian_coproduct_scaled(alg, &Poly::one())
}

pub fn jordanian_coproduct_scaled(alg: &NcAlgebra, lambda: &Poly) -> Coproduct {
    use osc::*;
    let order = alg.order();
    let one = alg.one();
    let e = exp_of_generator(4, AP, 1, lambda, order);
    let mut images = Coproduct::primitive(alg).images;
    images[N] = t2(alg, &one, &alg.gen(N)).add(&t2(alg, &alg.gen(N), &e));
    let z = Series::monomial(lambda.clone(), 1, order);
    let me = alg.mul(&alg.gen(M), &e);
    images[AM] = t2(alg, &one, &alg.gen(AM))
        .add(&t2(alg, &alg.gen(AM), &e))
        .add(&t2(alg, &alg.gen(N), &me).scale(&z));
    Coproduct { images }
}

/// `Δ(A±) = e^{-zM/2}⊗A± + A±⊗e^{zM/2}`, `N` and `M` primitive.
pub fn standard_coproduct(alg: &NcAlgebra) -> Coproduct {
    use osc::*;
    let half = Poly::constant(Rat::new(1.into(), 2.into()));
    let minus = exp_of_generator(4, M, -1, &half, alg.order());
    let plus = exp_of_generator(4, M, 1, &half, alg.order());
    let mut images = Coproduct::primitive(alg).images;
    for g in [AP, AM] {
        images[g] = t2(alg, &minus, &alg.gen(g)).add(&t2(alg, &alg.gen(g), &plus));
    }
    Coproduct { images }
}

/// `C = 2NM + ((e^{-zA+}-1)/z) A- + A- ((e^{-zA+}-1)/z)` in normal order.
pub fn quantum_casimir(alg: &NcAlgebra) -> PbwElement {
    quantum_casimir_scaled(alg, &Poly::one())
}

pub fn quantum_casimir_scaled(alg: &NcAlgebra, lambda: &Poly) -> PbwElement {
    use osc::*;
    let order = alg.order();
    let mut f = PbwElement::zero(order);
    for k in 1..=order + 1 {
        let c = Rat::from_integer((-1i64).pow(k as u32).into()) / factorial(k as u32);
        f.add_term(osc_mono(0, 0, k as u32, 0), scaled_z(c, lambda, k - 1, order));
    }
    let two = Series::rational(Rat::from_integer(2.into()), order);
    alg.mul(&alg.gen(N), &alg.gen(M))
        .scale(&two)
        .add(&alg.mul(&f, &alg.gen(AM)))
        .add(&alg.mul(&alg.gen(AM), &f))
}

/// `2NM - A+A- - A-A+`.
pub fn classical_casimir(alg: &NcAlgebra) -> PbwElement {
    use osc::*;
    let two = Series::rational(Rat::from_integer(2.into()), alg.order());
    alg.word(&[N, M])
        .scale(&two)
        .sub(&alg.word(&[AP, AM]))
        .sub(&alg.word(&[AM, AP]))
}
