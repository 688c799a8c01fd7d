//! Series oracle for the `E`-conjugation rules. The coordinate `n` and
//! `a-` are rescaled by an auxiliary parameter `s` (`n = s ν`,
//! `a- = s α`) so that `e^n = e^{sν}` is a genuine truncated series; the
//! deformation parameter `z` stays a polynomial symbol.

use super::coord::{QCoordAlgebra, QElem, QGen};
use crate::check::Labeled;
use crate::math::{factorial, Poly, Series};
use crate::pbw::{exp_of_generator, NcAlgebra, PbwElement};

const M: usize = 0;
const ALPHA: usize = 1;
const AP: usize = 2;
const NU: usize = 3;

fn mono(exps: [u32; 4]) -> Vec<u32> {
    exps.to_vec()
}

/// `[ν, a+] = z (e^{sν} - 1)/s`, `[ν, m] = zα`, `[α, a+] = zα`,
/// `[a+, m] = z s α a+`, `[α, m] = -z s α²`, `[ν, α] = 0`.
pub fn rescaled_coordinate_algebra(order: usize) -> NcAlgebra {
    let z = Poly::var("z");
    let c = |p: &Poly, k: usize| Series::monomial(p.clone(), k, order);
    let mut nu_ap = PbwElement::zero(order);
    for k in 1..=order + 1 {
        let coef = z.scale(&factorial(k as u32).recip());
        nu_ap.add_term(mono([0, 0, 0, k as u32]), c(&coef, k - 1));
    }
    let rels = vec![
        ((AP, ALPHA), PbwElement::monomial(mono([0, 1, 0, 0]), c(&-&z, 0))),
        ((ALPHA, M), PbwElement::monomial(mono([0, 2, 0, 0]), c(&-&z, 1))),
        ((AP, M), PbwElement::monomial(mono([0, 1, 1, 0]), c(&z, 1))),
        ((NU, M), PbwElement::monomial(mono([0, 1, 0, 0]), c(&z, 0))),
        ((NU, AP), nu_ap),
    ];
    NcAlgebra::new(&["m", "α", "a+", "ν"], order, rels).expect("valid relations")
}

/// Image of a coordinate element: `a- -> sα`, `E^d -> e^{d s ν}`.
pub fn embed(alg: &NcAlgebra, x: &QElem) -> PbwElement {
    let order = alg.order();
    let e_plus = exp_of_generator(4, NU, 1, &Poly::one(), order);
    let e_minus = exp_of_generator(4, NU, -1, &Poly::one(), order);
    let mut out = alg.zero();
    for (m, c) in x.terms() {
        let mut acc = PbwElement::monomial(mono([m.m, m.am, m.ap, 0]), Series::monomial(c.clone(), m.am as usize, order));
        let e = if m.e >= 0 { &e_plus } else { &e_minus };
        for _ in 0..m.e.unsigned_abs() {
            acc = alg.mul(&acc, e);
        }
        out = out.add(&acc);
    }
    out
}

/// `ι(x) ι(y) - ι(xy)` for every pair of letters, with `xy` reduced by
/// the exact coordinate rules.
pub fn conjugation_oracle(order: usize) -> Vec<Labeled<PbwElement>> {
    let q = QCoordAlgebra::new();
    let alg = rescaled_coordinate_algebra(order);
    let mut out = Vec::new();
    for x in QGen::ALL {
        for y in QGen::ALL {
            let lhs = alg.mul(&embed(&alg, &QElem::gen(x)), &embed(&alg, &QElem::gen(y)));
            let rhs = embed(&alg, &q.word(&[x, y]));
            out.push(Labeled::new(format!("{} {}", x.name(), y.name()), lhs.sub(&rhs)));
        }
    }
    out
}
