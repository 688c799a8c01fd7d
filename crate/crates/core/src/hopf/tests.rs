use super::*;
use crate::check::all_passed;
use crate::pbw::{osc, standard_coproduct, standard_h4};

#[test]
fn jordanian_is_a_hopf_algebra_to_order_three() {
    let h = HopfData::jordanian(3);
    assert!(check_hom(&h).iter().all(|r| r.value.is_zero()));
    assert!(check_coassoc(&h).iter().all(|r| r.value.is_zero()));
    let ca = derive_antipode_counit(&h).unwrap();
    assert!(all_passed(&ca.checks), "{:?}", ca.checks);
    assert!(ca.counit.iter().all(Series::is_zero));
}

#[test]
fn antipode_of_generators() {
    let h = HopfData::jordanian(3);
    let alg = &h.alg;
    let ca = derive_antipode_counit(&h).unwrap();
    assert_eq!(ca.antipode[osc::AP], alg.gen(osc::AP).neg());
    assert_eq!(ca.antipode[osc::M], alg.gen(osc::M).neg());
    // S(N) = -N e^{-zA+}
    let e = crate::pbw::exp_of_generator(4, osc::AP, -1, &Poly::one(), 3);
    assert_eq!(ca.antipode[osc::N], alg.mul(&alg.gen(osc::N), &e).neg());
    // S(A+) squares back, S(N) does not.
    assert_eq!(ca.antipode_squared[osc::AP], alg.gen(osc::AP));
    assert_ne!(ca.antipode_squared[osc::N], alg.gen(osc::N));
}

#[test]
fn broken_coproduct_is_detected() {
    let mut h = HopfData::jordanian(2);
    let alg = &h.alg;
    // Drop the zN⊗Me^{zA+} tail of Δ(A-).
    let one = alg.one();
    let e = crate::pbw::exp_of_generator(4, osc::AP, 1, &Poly::one(), 2);
    h.coproduct.images[osc::AM] = TensorElement::from_slots(2, &[one, alg.gen(osc::AM)])
        .add(&TensorElement::from_slots(2, &[alg.gen(osc::AM), e]));
    let bad: Vec<String> = check_hom(&h)
        .into_iter()
        .filter(|r| !r.value.is_zero())
        .map(|r| r.label)
        .collect();
    assert!(bad.contains(&"[A+, A-]".to_string()), "{bad:?}");
}

#[test]
fn standard_coproduct_is_homomorphic() {
    let alg = standard_h4(3);
    let h = HopfData {
        coproduct: standard_coproduct(&alg),
        alg,
    };
    assert!(check_hom(&h).iter().all(|r| r.value.is_zero()));
    assert!(check_coassoc(&h).iter().all(|r| r.value.is_zero()));
    let ca = derive_antipode_counit(&h).unwrap();
    assert!(all_passed(&ca.checks));
}

#[test]
fn casimir_is_central() {
    let h = HopfData::jordanian(3);
    let c = crate::pbw::quantum_casimir(&h.alg);
    assert!(casimir_centrality(&h.alg, &c).iter().all(|r| r.value.is_zero()));
    // A wrong sign in the tail is not central.
    let wrong = c.sub(&h.alg.word(&[osc::AP, osc::AM]).scale(&Series::z(3)));
    assert!(casimir_centrality(&h.alg, &wrong).iter().any(|r| !r.value.is_zero()));
}

#[test]
fn report_passes_at_order_three() {
    let r = verify_hopf(3).unwrap();
    assert!(all_passed(&r.checks), "{:?}", r.checks);
    assert_eq!(r.counit.len(), 4);
}

#[test]
fn report_passes_at_order_six() {
    let t = std::time::Instant::now();
    let r = verify_hopf(6).unwrap();
    assert!(all_passed(&r.checks), "{:?}", r.checks);
    eprintln!("order 6 hopf: {:?}", t.elapsed());
}
