use super::osc::*;
use super::*;
use crate::math::{rat, Poly, Rat, Series};

const ORDER: usize = 6;

fn elem(alg: &NcAlgebra, terms: &[(&[u32], Series)]) -> PbwElement {
    PbwElement::from_terms(alg.order(), terms.iter().map(|(m, c)| (m.to_vec(), c.clone())))
}

fn z_pow(c: Rat, k: usize) -> Series {
    Series::monomial(Poly::constant(c), k, ORDER)
}

#[test]
fn classical_reordering() {
    let alg = classical_h4(ORDER);
    let one = Series::one(ORDER);
    let expected = elem(&alg, &[(&[0, 1, 1, 0], one.clone()), (&[1, 0, 0, 0], -&one)]);
    assert_eq!(alg.word(&[AP, AM]), expected);
    assert_eq!(alg.commutator(&alg.gen(AM), &alg.gen(AP)), alg.gen(M));
    assert_eq!(alg.word(&[]), alg.one());
}

#[test]
fn deformed_reordering() {
    let alg = deformed_h4(ORDER);
    let mut expected = elem(&alg, &[(&[0, 0, 1, 1], Series::one(ORDER))]);
    for k in 1..=ORDER + 1 {
        let c = Rat::from_integer(1.into()) / crate::math::factorial(k as u32);
        expected.add_term(vec![0, 0, k as u32, 0], z_pow(c, k - 1));
    }
    assert_eq!(alg.word(&[N, AP]), expected);
    assert_eq!(alg.commutator(&alg.gen(N), &alg.gen(AM)), alg.gen(AM).neg());
}

#[test]
fn exponentials() {
    let alg = deformed_h4(ORDER);
    assert_eq!(alg.exp(&alg.zero()).unwrap(), alg.one());
    let za = alg.gen(AP).scale(&Series::z(ORDER));
    let e = alg.exp(&za).unwrap();
    let e_inv = alg.exp(&za.neg()).unwrap();
    assert_eq!(alg.mul(&e, &e_inv), alg.one());
    assert_eq!(e, exp_of_generator(4, AP, 1, &Poly::one(), ORDER));
    // [N, e^{zA+}] = e^{2zA+} - e^{zA+}.
    let lhs = alg.commutator(&alg.gen(N), &e);
    assert_eq!(lhs, alg.mul(&e, &e).sub(&e));
    assert!(alg.exp(&alg.gen(AP)).is_err());
}

#[test]
fn coproduct_examples() {
    let alg = deformed_h4(ORDER);
    let delta = jordanian_coproduct(&alg);
    let one = alg.one();
    let m = alg.gen(M);
    let expected = TensorElement::from_slots(ORDER, &[one.clone(), m.clone()])
        .add(&TensorElement::from_slots(ORDER, &[m, one.clone()]));
    assert_eq!(delta.apply(&alg, &alg.gen(M)), expected);
    assert_eq!(delta.apply(&alg, &one), alg.tensor_one(2));
    let prod = delta.apply(&alg, &alg.mul(&alg.gen(N), &alg.gen(AP)));
    let manual = alg.tensor_mul(&delta.images[N], &delta.images[AP]);
    assert_eq!(prod, manual);
}

#[test]
fn coproduct_of_product_at_order_two_by_hand() {
    // Delta(N A+) = (1(x)N + N(x)E)(1(x)A+ + A+(x)1), E = 1 + zA+ + z^2 A+^2/2.
    let alg = deformed_h4(2);
    let delta = jordanian_coproduct(&alg);
    let got = delta.apply(&alg, &alg.word(&[N, AP]));
    let s = |c: Rat, k: usize| Series::monomial(Poly::constant(c), k, 2);
    let mut want = TensorElement::zero(2, 2);
    let t = |a: [u32; 4], b: [u32; 4]| vec![a.to_vec(), b.to_vec()];
    // 1 (x) N A+ = 1 (x) (A+ N + A+ + z A+^2/2 + z^2 A+^3/6)
    want.add_term(t([0; 4], [0, 0, 1, 1]), s(rat(1, 1), 0));
    want.add_term(t([0; 4], [0, 0, 1, 0]), s(rat(1, 1), 0));
    want.add_term(t([0; 4], [0, 0, 2, 0]), s(rat(1, 2), 1));
    want.add_term(t([0; 4], [0, 0, 3, 0]), s(rat(1, 6), 2));
    // A+ (x) N
    want.add_term(t([0, 0, 1, 0], [0, 0, 0, 1]), s(rat(1, 1), 0));
    // N (x) E A+
    want.add_term(t([0, 0, 0, 1], [0, 0, 1, 0]), s(rat(1, 1), 0));
    want.add_term(t([0, 0, 0, 1], [0, 0, 2, 0]), s(rat(1, 1), 1));
    want.add_term(t([0, 0, 0, 1], [0, 0, 3, 0]), s(rat(1, 2), 2));
    // N A+ (x) E = (A+ N + A+ + z A+^2/2 + z^2 A+^3/6) (x) E
    for (left, lc, lk) in [
        ([0, 0, 1, 1], rat(1, 1), 0),
        ([0, 0, 1, 0], rat(1, 1), 0),
        ([0, 0, 2, 0], rat(1, 2), 1),
        ([0, 0, 3, 0], rat(1, 6), 2),
    ] {
        for (right, rc, rk) in [([0, 0, 0, 0], rat(1, 1), 0), ([0, 0, 1, 0], rat(1, 1), 1), ([0, 0, 2, 0], rat(1, 2), 2)] {
            if lk + rk <= 2 {
                want.add_term(t(left, right), s(&lc * &rc, lk + rk));
            }
        }
    }
    assert_eq!(got, want);
}

#[test]
fn strategies_agree_with_engine() {
    let alg = deformed_h4(4);
    let one = Series::one(4);
    for w in [vec![N, AP, AM, N], vec![AP, AP, AM, M, N, AM], vec![N, N, N, AP]] {
        let engine = alg.word(&w);
        let left = normal_form(&alg, &w, &one, Strategy::Leftmost, 100_000).unwrap();
        let right = normal_form(&alg, &w, &one, Strategy::Rightmost, 100_000).unwrap();
        assert_eq!(left, engine);
        assert_eq!(right, engine);
    }
    assert_eq!(
        normal_form(&alg, &[N, AP], &one, Strategy::Leftmost, 0),
        Err(PbwError::FuelExhausted(0))
    );
    assert_eq!(
        normal_form(&alg, &[7], &one, Strategy::Leftmost, 10),
        Err(PbwError::BadGenerator(7))
    );
}

#[test]
fn classical_limit_of_deformed_words() {
    let def = deformed_h4(3);
    let cl = classical_h4(3);
    for w in [vec![N, AP], vec![AP, AM], vec![N, AP, AM, AP]] {
        assert_eq!(def.word(&w).z_coefficient(0), cl.word(&w));
    }
}

#[test]
fn weyl_reordering() {
    let alg = weyl_algebra(2);
    let one = Series::one(2);
    let two = Series::rational(rat(2, 1), 2);
    assert_eq!(
        alg.word(&[weyl::AM, weyl::AP]),
        PbwElement::from_terms(2, [(vec![1, 1], one.clone()), (vec![0, 0], one.clone())])
    );
    assert_eq!(alg.word(&[weyl::AP, weyl::AM]), PbwElement::monomial(vec![1, 1], one.clone()));
    assert_eq!(
        alg.word(&[weyl::AM, weyl::AP, weyl::AP]),
        PbwElement::from_terms(2, [(vec![2, 1], one), (vec![1, 0], two)])
    );
}

#[test]
fn bad_relations_rejected() {
    let r = PbwElement::zero(2);
    assert!(NcAlgebra::new(&["x", "y"], 2, vec![((0, 1), r.clone())]).is_err());
    assert!(NcAlgebra::new(&["x", "y"], 2, vec![((1, 0), PbwElement::one(3, 2))]).is_err());
}
