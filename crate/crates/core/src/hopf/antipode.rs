use std::collections::HashMap;

use super::{HopfData, HopfError};
use crate::check::Check;
use crate::math::Series;
use crate::pbw::{Mono, NcAlgebra, PbwElement, TensorElement};

/// Counit values on generators, antipode images of generators, and the
/// verification outcome.
#[derive(Clone, Debug)]
pub struct CounitAntipode {
    pub counit: Vec<Series>,
    pub antipode: Vec<PbwElement>,
    pub antipode_squared: Vec<PbwElement>,
    pub checks: Vec<Check>,
}

/// `ε` extended multiplicatively.
pub fn apply_counit(counit: &[Series], e: &PbwElement) -> Series {
    let order = e.order();
    let mut out = Series::zero(order);
    for (m, c) in e.terms() {
        let mut v = c.clone();
        for (g, &k) in m.iter().enumerate() {
            for _ in 0..k {
                v = &v * &counit[g];
            }
        }
        out = &out + &v;
    }
    out
}

fn counit_slot(counit: &[Series], t: &TensorElement, slot: usize, n: usize) -> PbwElement {
    let order = t.order();
    let mut out = PbwElement::zero(order);
    for (k, c) in t.terms() {
        let v = apply_counit(counit, &PbwElement::monomial(k[slot].clone(), c.clone()));
        out.add_term(k[1 - slot].clone(), v);
    }
    let _ = n;
    out
}

/// `S` extended as an anti-homomorphism: `S(x_0^a ... x_k^b) = S(x_k)^b ... S(x_0)^a`.
pub fn apply_antipode(alg: &NcAlgebra, s: &[PbwElement], e: &PbwElement) -> PbwElement {
    let mut cache: HashMap<Mono, PbwElement> = HashMap::new();
    let mut out = alg.zero();
    for (m, c) in e.terms() {
        let img = cache.entry(m.clone()).or_insert_with(|| {
            let mut acc = alg.one();
            for (g, &k) in m.iter().enumerate().rev() {
                for _ in 0..k {
                    acc = alg.mul(&acc, &s[g]);
                }
            }
            acc
        });
        out.add_scaled(img, c);
    }
    out
}

/// `m (f ⊗ g) t` for a 2-tensor.
fn multiply_out(
    alg: &NcAlgebra,
    t: &TensorElement,
    left: impl Fn(&PbwElement) -> PbwElement,
    right: impl Fn(&PbwElement) -> PbwElement,
) -> PbwElement {
    let order = alg.order();
    let mut out = alg.zero();
    for (k, c) in t.terms() {
        let a = left(&PbwElement::monomial(k[0].clone(), Series::one(order)));
        let b = right(&PbwElement::monomial(k[1].clone(), Series::one(order)));
        out.add_scaled(&alg.mul(&a, &b), c);
    }
    out
}

/// Solves the counit from `(ε ⊗ id)Δ = id` and the antipode from
/// `m(S ⊗ id)Δ = ε 1` by fixed-point iteration in the z-filtration, then
/// verifies both antipode axioms, both counit axioms, compatibility with
/// every relation, and reports `S²`.
pub fn derive_antipode_counit(h: &HopfData) -> Result<CounitAntipode, HopfError> {
    let alg = &h.alg;
    let n = alg.dim();
    let order = alg.order();
    let name = |g: usize| alg.names()[g].to_string();

    // Counit: adjust the unit-monomial component until (ε ⊗ id)Δ(x) = x.
    let unit: Mono = vec![0; n];
    let mut counit = vec![Series::zero(order); n];
    let mut settled = false;
    for _ in 0..order + 3 {
        let mut next = counit.clone();
        for g in 0..n {
            let lhs = counit_slot(&counit, &h.coproduct.images[g], 0, n);
            let defect = lhs.sub(&alg.gen(g)).coeff(&unit);
            next[g] = &counit[g] - &defect;
        }
        if next == counit {
            settled = true;
            break;
        }
        counit = next;
    }
    if !settled {
        return Err(HopfError::NoSolution {
            what: "counit",
            generator: name(0),
        });
    }

    // Antipode: split Δ(x) = x ⊗ h_x + rest and iterate
    // S(x) = (ε(x) - m(S ⊗ id)(rest)) h_x^{-1}.
    let mut heads = Vec::with_capacity(n);
    let mut rests = Vec::with_capacity(n);
    for g in 0..n {
        let mut head = alg.zero();
        let mut rest = TensorElement::zero(2, order);
        let gm = alg.gen(g).terms().next().map(|(m, _)| m.clone()).expect("generator");
        for (k, c) in h.coproduct.images[g].terms() {
            if k[0] == gm {
                head.add_term(k[1].clone(), c.clone());
            } else {
                rest.add_term(k.clone(), c.clone());
            }
        }
        let inv = invert(alg, &head).ok_or_else(|| HopfError::NoSolution {
            what: "antipode",
            generator: name(g),
        })?;
        heads.push(inv);
        rests.push(rest);
    }
    let mut s: Vec<PbwElement> = vec![alg.zero(); n];
    let mut settled = false;
    for _ in 0..order + 3 {
        let next: Vec<PbwElement> = (0..n)
            .map(|g| {
                let eps = alg.scalar(apply_counit(&counit, &alg.gen(g)));
                let tail = multiply_out(alg, &rests[g], |a| apply_antipode(alg, &s, a), Clone::clone);
                alg.mul(&eps.sub(&tail), &heads[g])
            })
            .collect();
        if next == s {
            settled = true;
            break;
        }
        s = next;
    }
    if !settled {
        return Err(HopfError::NoSolution {
            what: "antipode",
            generator: name(0),
        });
    }

    let mut checks = Vec::new();
    let mut bad = Vec::new();
    for g in 0..n {
        let x = alg.gen(g);
        let d = &h.coproduct.images[g];
        if counit_slot(&counit, d, 0, n) != x || counit_slot(&counit, d, 1, n) != x {
            bad.push(name(g));
        }
    }
    checks.push(axiom_check("counit_axioms", &bad));

    let mut bad_left = Vec::new();
    let mut bad_right = Vec::new();
    for g in 0..n {
        let d = &h.coproduct.images[g];
        let eps = alg.scalar(apply_counit(&counit, &alg.gen(g)));
        let left = multiply_out(alg, d, |a| apply_antipode(alg, &s, a), Clone::clone);
        let right = multiply_out(alg, d, Clone::clone, |a| apply_antipode(alg, &s, a));
        if left != eps {
            bad_left.push(name(g));
        }
        if right != eps {
            bad_right.push(name(g));
        }
    }
    checks.push(axiom_check("antipode_left_axiom", &bad_left));
    checks.push(axiom_check("antipode_right_axiom", &bad_right));

    // S must reverse every defining relation, and ε must kill it.
    let mut bad_rel = Vec::new();
    let mut bad_eps = Vec::new();
    for j in 0..n {
        for i in 0..j {
            let rel = alg.relation(j, i);
            let lhs = apply_antipode(alg, &s, rel);
            let rhs = alg.commutator(&s[i], &s[j]);
            if lhs != rhs {
                bad_rel.push(format!("[{}, {}]", name(j), name(i)));
            }
            let e = &(&counit[j] * &counit[i]) - &(&counit[i] * &counit[j]);
            if apply_counit(&counit, rel) != e {
                bad_eps.push(format!("[{}, {}]", name(j), name(i)));
            }
        }
    }
    checks.push(axiom_check("antipode_antihomomorphism", &bad_rel));
    checks.push(axiom_check("counit_homomorphism", &bad_eps));

    let antipode_squared = (0..n).map(|g| apply_antipode(alg, &s, &s[g])).collect();
    Ok(CounitAntipode {
        counit,
        antipode: s,
        antipode_squared,
        checks,
    })
}

fn axiom_check(name: &str, bad: &[String]) -> Check {
    if bad.is_empty() {
        Check::pass(name, "holds on every generator")
    } else {
        Check::fail(name, format!("fails on {}", bad.join(", ")))
    }
}

/// Inverse of `1 + u` with `u` of positive valuation, as `sum (-u)^k`.
fn invert(alg: &NcAlgebra, h: &PbwElement) -> Option<PbwElement> {
    let u = h.sub(&alg.one());
    if u.is_zero() {
        return Some(alg.one());
    }
    if u.valuation()? == 0 {
        return None;
    }
    let neg = u.neg();
    let mut acc = alg.one();
    let mut power = alg.one();
    loop {
        power = alg.mul(&power, &neg);
        if power.is_zero() {
            break;
        }
        acc = acc.add(&power);
    }
    Some(acc)
}
