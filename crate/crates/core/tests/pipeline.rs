use std::time::Instant;

use qosc::bialgebra::{classify, classify_h4, first_order_cocommutator, schouten, BranchKind};
use qosc::check::all_passed;
use qosc::hopf::{verify_hopf, HopfData};
use qosc::lie::{h4, h4_algebra, parse_lie_algebra, LieError, Wedge2};
use qosc::math::{poly, Poly, Symbol};
use qosc::pbw::{deformed_h4, jordanian_coproduct, osc};
use qosc::qgroup::{verify_frt, verify_sklyanin, SklyaninSign};
use qosc::rmatrix::verify_rmatrix;

#[test]
fn h4_classification_end_to_end() {
    let t = Instant::now();
    let c = classify_h4().unwrap();
    let failed: Vec<_> = c.all_checks().filter(|c| !c.passed).collect();
    assert!(failed.is_empty(), "{failed:?}");
    assert_eq!(c.raw_family.params.len(), 6);
    assert_eq!(c.branches.len(), 3);
    assert!(c.classification.branches.iter().all(|b| b.is_coboundary()));
    assert!(t.elapsed().as_secs_f64() < 1.0);
}

#[test]
fn ideal_is_the_three_monomials() {
    let c = classify_h4().unwrap();
    let ideal = &c.classification.ideal;
    assert_eq!(ideal.len(), 3);
}

#[test]
fn standard_and_jordanian_locations() {
    let c = classify_h4().unwrap();
    let loc = |v: &[(Symbol, Poly)]| v.iter().map(|(_, p)| p.to_string()).collect::<Vec<_>>();
    assert_eq!(loc(&c.standard_location), ["0", "0", "z", "z", "0", "0"]);
    assert_eq!(loc(&c.jordanian_location), ["z", "0", "0", "0", "0", "0"]);
}

#[test]
fn jordanian_r_is_triangular() {
    let r = Wedge2::term(h4::N, h4::AP, poly("z"));
    assert!(schouten(&h4_algebra(), &r).unwrap().is_zero());
}

#[test]
fn triangularity_polynomials() {
    let c = classify_h4().unwrap();
    for b in &c.branches {
        let expected = match b.kind {
            BranchKind::A => "4*a1*a6 + a4^2",
            BranchKind::B => "4*a2*a5 + a3^2",
            BranchKind::C => "a3 + a4",
        };
        assert_eq!(b.triangularity, poly(expected));
    }
}

#[test]
fn one_dimensional_algebra_is_trivial() {
    let alg = parse_lie_algebra("basis: H\n").unwrap();
    let c = classify(&alg).unwrap();
    assert!(c.family.params.is_empty());
    assert!(all_passed(&c.checks));
}

#[test]
fn jacobi_violations_are_rejected() {
    // sl2 with one structure constant corrupted.
    let good = "basis: H, E, F\n[H, E] = 2 E\n[H, F] = -2 F\n[E, F] = H\n";
    assert!(parse_lie_algebra(good).is_ok());
    let bad = "basis: H, E, F\n[H, E] = 3 E\n[H, F] = -2 F\n[E, F] = H\n";
    assert!(matches!(parse_lie_algebra(bad), Err(LieError::JacobiViolation(..))));
    let broken = "basis: X1, X2, X3\n[X1, X2] = X3\n[X1, X3] = X1\n";
    assert!(matches!(parse_lie_algebra(broken), Err(LieError::JacobiViolation(..))));
}

#[test]
fn first_order_of_jordanian_coproduct() {
    let alg = deformed_h4(4);
    let d = first_order_cocommutator(&alg, &jordanian_coproduct(&alg)).unwrap();
    assert_eq!(d.images[h4::N], Wedge2::term(h4::N, h4::AP, poly("z")));
    assert!(d.images[h4::AP].is_zero());
    assert!(d.images[h4::M].is_zero());
}

#[test]
fn hopf_order_six_under_ten_seconds() {
    let t = Instant::now();
    let r = verify_hopf(6).unwrap();
    assert!(all_passed(&r.checks), "{:?}", r.checks);
    assert!(t.elapsed().as_secs_f64() < 10.0);
    // The counit vanishes on generators.
    assert!(r.counit.iter().all(|(_, v)| v.is_zero()));
}

#[test]
fn n_commutes_with_exponential_as_expected() {
    let h = HopfData::jordanian(5);
    let alg = &h.alg;
    let e = qosc::pbw::exp_of_generator(4, osc::AP, 1, &Poly::one(), 5);
    let lhs = alg.commutator(&alg.gen(osc::N), &e);
    let rhs = alg.mul(&e, &e).sub(&e);
    assert_eq!(lhs, rhs);
    let inv = qosc::pbw::exp_of_generator(4, osc::AP, -1, &Poly::one(), 5);
    assert_eq!(alg.mul(&e, &inv), alg.one());
}

#[test]
fn rmatrix_order_six() {
    let r = verify_rmatrix(6).unwrap();
    assert!(all_passed(&r.checks), "{:?}", r.checks);
    assert!(r.control_residual_terms > 0);
}

#[test]
fn frt_and_sklyanin() {
    let f = verify_frt();
    assert!(all_passed(&f.checks), "{:?}", f.checks);
    assert!(f.control_nonzero_entries > 0);
    let s = verify_sklyanin();
    assert!(all_passed(&s.checks));
    assert_eq!(s.sign, SklyaninSign::Minus);
}

#[test]
fn boson_order_six() {
    let r = qosc::boson::verify_boson(6);
    assert!(all_passed(&r.checks), "{:?}", r.checks);
}
