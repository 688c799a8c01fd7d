use proptest::prelude::*;

use qosc::bialgebra::{delta_from_r, r_from_delta, split_monomial_ideal, wedge2_coordinates};
use qosc::lie::{adjoint_action, h4_algebra, skew_part, Tensor, Wedge2};
use qosc::math::{mat_vec, nullspace_basis, poly, rat, rref, Poly, Rat, Series, Symbol};
use qosc::pbw::{classical_h4, deformed_h4, normal_form, PbwElement, Strategy as Rewrite};
use qosc::qgroup::{QCoordAlgebra, QElem, QGen};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn small_poly() -> impl Strategy<Value = Poly> {
    let term = (small_rat(), 0u32..3, 0u32..3, 0u32..2)
        .prop_map(|(c, a, b, e)| &(&Poly::var("x").pow(a) * &Poly::var("y").pow(b)) * &Poly::var("z").pow(e).scale(&c));
    prop::collection::vec(term, 0..4).prop_map(|ts| ts.iter().fold(Poly::zero(), |acc, t| &acc + t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn series_exp_inverse(coeffs in prop::collection::vec(small_poly(), 1..4), order in 1usize..6) {
        let mut cs = vec![Poly::zero()];
        cs.extend(coeffs);
        let s = Series::from_coeffs(cs, order);
        let e = s.exp().unwrap();
        let f = (-&s).exp().unwrap();
        prop_assert!((&e * &f).is_one());
        prop_assert_eq!(e.inverse().unwrap(), f);
    }

    #[test]
    fn nullspace_vectors_are_annihilated(
        rows in prop::collection::vec(prop::collection::vec(small_rat(), 5), 1..5)
    ) {
        let basis = nullspace_basis(&rows, 5);
        let (_, pivots) = rref(&rows, 5);
        prop_assert_eq!(basis.len(), 5 - pivots.len());
        for v in &basis {
            prop_assert!(mat_vec(&rows, v).iter().all(|x| *x == Rat::from_integer(0.into())));
        }
    }

    #[test]
    fn adjoint_action_is_a_representation(
        x in 0usize..4,
        y in 0usize..4,
        entries in prop::collection::vec((0usize..4, 0usize..4, small_rat()), 0..6)
    ) {
        let alg = h4_algebra();
        let mut t = Tensor::zero(2);
        for (i, j, c) in entries {
            t.add_term(vec![i, j], Poly::constant(c));
        }
        // ad_{[x,y]} = ad_x ad_y - ad_y ad_x
        let bracket = alg.bracket(x, y).to_vec();
        let mut lhs = Tensor::zero(2);
        for (k, c) in bracket.iter().enumerate() {
            if *c != Rat::from_integer(0.into()) {
                lhs = lhs.add(&adjoint_action(&alg, k, &t).unwrap().scale(&Poly::constant(c.clone())));
            }
        }
        let xy = adjoint_action(&alg, x, &adjoint_action(&alg, y, &t).unwrap()).unwrap();
        let yx = adjoint_action(&alg, y, &adjoint_action(&alg, x, &t).unwrap()).unwrap();
        prop_assert_eq!(lhs, xy.sub(&yx));
    }

    #[test]
    fn skew_part_is_idempotent(entries in prop::collection::vec((0usize..4, 0usize..4, small_poly()), 0..6)) {
        let mut t = Tensor::zero(2);
        for (i, j, c) in entries {
            t.add_term(vec![i, j], c);
        }
        let w = skew_part(&t).unwrap();
        prop_assert_eq!(skew_part(&w.to_tensor()).unwrap(), w);
    }

    #[test]
    fn coboundary_round_trip(coeffs in prop::collection::vec(small_rat(), 6)) {
        let alg = h4_algebra();
        let mut r = Wedge2::zero();
        let mut it = coeffs.into_iter();
        for i in 0..4 {
            for j in i + 1..4 {
                r.add_term(i, j, Poly::constant(it.next().unwrap()));
            }
        }
        let delta = delta_from_r(&alg, &r).unwrap();
        let set = r_from_delta(&alg, &delta).unwrap();
        prop_assert!(set.contains(&wedge2_coordinates(&r, 4)));
    }

    #[test]
    fn branches_cover_the_cojacobi_variety(vals in prop::collection::vec(prop_oneof![Just(0i64), -3i64..=3], 4)) {
        let a: Vec<Poly> = vals.iter().map(|&v| Poly::integer(v)).collect();
        let ideal = [poly("a1*a2"), poly("a1*a3"), poly("a2*a4")];
        let subs: Vec<(Symbol, Poly)> = (0..4).map(|i| (Symbol::new(&format!("a{}", i + 1)), a[i].clone())).collect();
        let on_variety = ideal.iter().all(|g| g.substitute_all(&subs).is_zero());
        let branches = split_monomial_ideal(&ideal).unwrap();
        let vanishes = |s: &Symbol| subs.iter().find(|(t, _)| t == s).is_none_or(|(_, v)| v.is_zero());
        let hits = branches.iter().filter(|b| b.contains(vanishes)).count();
        if on_variety {
            prop_assert_eq!(hits, 1);
        } else {
            prop_assert_eq!(hits, 0);
        }
    }

    #[test]
    fn pbw_multiplication_is_associative(
        a in prop::collection::vec(0usize..4, 0..4),
        b in prop::collection::vec(0usize..4, 0..4),
        c in prop::collection::vec(0usize..4, 0..4),
    ) {
        let alg = deformed_h4(3);
        let (x, y, w) = (alg.word(&a), alg.word(&b), alg.word(&c));
        prop_assert_eq!(alg.mul(&alg.mul(&x, &y), &w), alg.mul(&x, &alg.mul(&y, &w)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rewriting_is_confluent(word in prop::collection::vec(0usize..4, 0..7), order in 0usize..4) {
        let alg = deformed_h4(order);
        let one = Series::one(order);
        let left = normal_form(&alg, &word, &one, Rewrite::Leftmost, 1_000_000).unwrap();
        let right = normal_form(&alg, &word, &one, Rewrite::Rightmost, 1_000_000).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(&left, &alg.word(&word));
    }

    #[test]
    fn coordinate_rewriting_is_confluent(word in prop::collection::vec(0usize..5, 0..7)) {
        let q = QCoordAlgebra::new();
        let letters: Vec<QGen> = word.iter().map(|&i| QGen::ALL[i]).collect();
        prop_assert_eq!(q.word(&letters), q.word_from_right(&letters));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rewriting_terminates_within_fuel(word in prop::collection::vec(0usize..4, 0..9), order in 0usize..7) {
        let alg = deformed_h4(order);
        prop_assert!(normal_form(&alg, &word, &Series::one(order), Rewrite::Leftmost, 5_000_000).is_ok());
    }

    #[test]
    fn deformed_words_have_the_classical_limit(word in prop::collection::vec(0usize..4, 0..7)) {
        let d = deformed_h4(3);
        let c = classical_h4(3);
        let limit: PbwElement = d.word(&word).z_coefficient(0);
        prop_assert_eq!(limit, c.word(&word));
    }

    #[test]
    fn coordinate_product_is_associative(
        a in prop::collection::vec(0usize..5, 0..4),
        b in prop::collection::vec(0usize..5, 0..4),
        c in prop::collection::vec(0usize..5, 0..4),
    ) {
        let q = QCoordAlgebra::new();
        let w = |v: &Vec<usize>| -> QElem { q.word(&v.iter().map(|&i| QGen::ALL[i]).collect::<Vec<_>>()) };
        let (x, y, u) = (w(&a), w(&b), w(&c));
        prop_assert_eq!(q.mul(&q.mul(&x, &y), &u), q.mul(&x, &q.mul(&y, &u)));
    }
}
