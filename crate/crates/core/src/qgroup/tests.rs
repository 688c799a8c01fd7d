use super::*;
use crate::check::all_passed;
use crate::math::poly;

fn q() -> QCoordAlgebra {
    QCoordAlgebra::new()
}

fn p(s: &str) -> Poly {
    poly(s)
}

#[test]
fn ladder_reordering() {
    let q = q();
    let expected = q.word(&[QGen::Am, QGen::Ap]).sub(&QElem::gen(QGen::Am).scale(&p("z")));
    assert_eq!(q.word(&[QGen::Ap, QGen::Am]), expected);
}

#[test]
fn group_like_inverse() {
    let q = q();
    assert_eq!(q.word(&[QGen::E, QGen::EInv]), QElem::one());
    assert_eq!(q.word(&[QGen::EInv, QGen::E]), QElem::one());
}

#[test]
fn e_past_a_plus() {
    let q = q();
    let mut expected = QElem::monomial(QMono::new(0, 0, 1, 1), Poly::one());
    expected.add_term(QMono::new(0, 0, 0, 2), p("z"));
    expected.add_term(QMono::new(0, 0, 0, 1), p("-z"));
    assert_eq!(q.word(&[QGen::E, QGen::Ap]), expected);
}

#[test]
fn e_inverse_past_a_plus() {
    // E^-1 a+ = (a+ - z(E - 1)) E^-1
    let q = q();
    let mut expected = QElem::monomial(QMono::new(0, 0, 1, -1), Poly::one());
    expected.add_term(QMono::ONE, p("-z"));
    expected.add_term(QMono::new(0, 0, 0, -1), p("z"));
    assert_eq!(q.word(&[QGen::EInv, QGen::Ap]), expected);
}

#[test]
fn defining_commutators() {
    let q = q();
    let g = QElem::gen;
    assert_eq!(q.commutator(&g(QGen::Am), &g(QGen::Ap)), g(QGen::Am).scale(&p("z")));
    assert_eq!(q.commutator(&g(QGen::Ap), &g(QGen::M)), q.word(&[QGen::Am, QGen::Ap]).scale(&p("z")));
    assert_eq!(
        q.commutator(&g(QGen::Am), &g(QGen::M)),
        q.word(&[QGen::Am, QGen::Am]).scale(&p("-z"))
    );
}

#[test]
fn conjugation_rules_match_series_oracle() {
    let bad: Vec<String> = conjugation_oracle(4)
        .into_iter()
        .filter(|l| !l.value.is_zero())
        .map(|l| l.label)
        .collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn rtt_holds_and_control_fails() {
    let r = represented_r();
    assert!(rtt_residual(&q(), &r).iter().all(|l| l.value.is_zero()));
    let ctrl = rtt_residual(&QCoordAlgebra::without_ladder_relation(), &r);
    assert!(ctrl.iter().any(|l| !l.value.is_zero()));
    // The (1,1)x(1,1) entry is trivially zero either way.
    assert!(ctrl[0].value.is_zero());
}

#[test]
fn coproduct_respects_the_ladder_relation() {
    let q = q();
    let cop = QCoproduct::standard(&q);
    let lhs = q.tensor_mul(cop.image(QGen::Am), cop.image(QGen::Ap));
    let rhs = q.tensor_mul(cop.image(QGen::Ap), cop.image(QGen::Am));
    assert_eq!(lhs.sub(&rhs), cop.image(QGen::Am).scale(&p("z")));
}

#[test]
fn a_wrong_coproduct_is_caught() {
    let q = q();
    let cop = QCoproduct::standard(&q);
    // Dropping the E^-1 factor from Δ(a-) breaks [a-, a+] = z a-.
    let bad_am = QTensor::from_slots(&[QElem::one(), QElem::gen(QGen::Am)])
        .add(&QTensor::from_slots(&[QElem::gen(QGen::Am), QElem::one()]));
    let lhs = q.tensor_mul(&bad_am, cop.image(QGen::Ap)).sub(&q.tensor_mul(cop.image(QGen::Ap), &bad_am));
    assert_ne!(lhs, bad_am.scale(&p("z")));
}

#[test]
fn frt_report_passes() {
    let r = verify_frt();
    assert!(all_passed(&r.checks), "{:?}", r.checks);
}

#[test]
fn sklyanin_report() {
    let r = verify_sklyanin();
    assert!(all_passed(&r.checks), "{:?}", r.checks);
    eprintln!("sklyanin sign: {:?}", r.sign);
}

#[test]
fn bracket_derived_from_quantum_commutators() {
    assert_eq!(BracketTable::from_quantum(&q()), BracketTable::candidate());
}
