//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test -p qosc-cli --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qosc::bialgebra::{classify_h4, delta_from_r, first_order_cocommutator};
use qosc::check::Check;
use qosc::hopf::{verify_hopf, HopfData};
use qosc::lie::{h4, h4_algebra, Wedge2};
use qosc::math::{poly, Series};
use qosc::pbw::{deformed_h4, normal_form, osc, Strategy};
use qosc::qgroup::{verify_frt, verify_sklyanin, SklyaninSign};
use qosc::{boson, rmatrix};
use qosc_cli::run_command;

struct Outcome {
    ok: bool,
    detail: String,
}

/// Every named check must be present and passing.
fn require(checks: &[Check], names: &[&str]) -> Outcome {
    let mut bad = Vec::new();
    for n in names {
        match checks.iter().find(|c| c.name == *n) {
            Some(c) if c.passed => {}
            Some(c) => bad.push(format!("{n} ({})", c.detail)),
            None => bad.push(format!("{n} missing")),
        }
    }
    if bad.is_empty() {
        Outcome {
            ok: true,
            detail: format!("{} checks", names.len()),
        }
    } else {
        Outcome {
            ok: false,
            detail: bad.join("; "),
        }
    }
}

fn and(mut a: Outcome, ok: bool, detail: impl Into<String>) -> Outcome {
    a.ok &= ok;
    a.detail = format!("{}; {}", a.detail, detail.into());
    a
}

fn note(mut a: Outcome, detail: String) -> Outcome {
    a.detail = format!("{}; {detail}", a.detail);
    a
}

fn timed(limit: Duration, elapsed: Duration, o: Outcome) -> Outcome {
    and(o, elapsed < limit, format!("{} ms (limit {} ms)", elapsed.as_millis(), limit.as_millis()))
}

fn branch_names(suffixes: &[&str]) -> Vec<String> {
    ["A", "B", "C"]
        .iter()
        .flat_map(|k| suffixes.iter().map(move |s| format!("type_{k}_{s}")))
        .collect()
}

fn confluence(cases: usize) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x05c1);
    let mut agree = 0;
    for _ in 0..cases {
        let order = rng.gen_range(0..4);
        let len = rng.gen_range(0..7);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..4)).collect();
        let alg = deformed_h4(order);
        let one = Series::one(order);
        let left = normal_form(&alg, &word, &one, Strategy::Leftmost, 1_000_000);
        let right = normal_form(&alg, &word, &one, Strategy::Rightmost, 1_000_000);
        if let (Ok(l), Ok(r)) = (left, right) {
            if l == r && l == alg.word(&word) {
                agree += 1;
            }
        }
    }
    (agree, cases)
}

fn exp_inverse(order: usize) -> bool {
    let s = Series::from_coeffs(vec![poly("0"), poly("a"), poly("b"), poly("c")], order);
    let series_ok = match (s.exp(), (-&s).exp()) {
        (Ok(e), Ok(f)) => (&e * &f).is_one(),
        _ => false,
    };
    let alg = deformed_h4(order);
    let z = alg.scalar(Series::z(order));
    let x = alg.mul(&z, &alg.gen(osc::N).add(&alg.gen(osc::AP)));
    let pbw_ok = match (alg.exp(&x), alg.exp(&x.neg())) {
        (Ok(e), Ok(f)) => alg.mul(&e, &f) == alg.one(),
        _ => false,
    };
    series_ok && pbw_ok
}

fn main() -> ExitCode {
    let mut lines: Vec<(String, Outcome)> = Vec::new();
    let sub_second = Duration::from_secs(1);

    let t = Instant::now();
    let classified = classify_h4();
    let t_classify = t.elapsed();
    match &classified {
        Ok(c) => {
            let checks: Vec<Check> = c.all_checks().cloned().collect();
            let o = require(&checks, &["cocycle_dimension", "renaming_matches_reference"]);
            lines.push(("1 cocycle kernel and renaming".into(), timed(sub_second, t_classify, o)));
            let o = require(&checks, &["cojacobi_ideal"]);
            lines.push(("2 co-Jacobi ideal".into(), timed(sub_second, t_classify, o)));
            let mut names = branch_names(&["r_reproduces_family", "r_in_solution_set", "identification"]);
            names.push("all_branches_coboundary".into());
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            lines.push(("3 coboundary branches".into(), require(&checks, &names)));
            let mut names = branch_names(&["triangularity", "schouten_ad_invariant"]);
            names.push("jordanian_schouten_zero".into());
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            lines.push(("4 Schouten brackets".into(), require(&checks, &names)));
            lines.push((
                "5 automorphisms".into(),
                require(&checks, &["shift_eliminates_a5", "swap_maps_b_into_a"]),
            ));
            let h = HopfData::jordanian(4);
            let expected = delta_from_r(&h4_algebra(), &Wedge2::term(h4::N, h4::AP, poly("z")));
            let first = first_order_cocommutator(&h.alg, &h.coproduct);
            let fo_ok = matches!((&first, &expected), (Ok(a), Ok(b)) if a == b);
            let o = require(&checks, &["standard_is_type_c", "jordanian_is_type_a"]);
            lines.push((
                "6 first-order cocommutator and locations".into(),
                and(o, fo_ok, "delta_1 = delta(z N^A+)"),
            ));
        }
        Err(e) => {
            for k in ["1", "2", "3", "4", "5", "6"] {
                lines.push((
                    format!("{k} classification"),
                    Outcome {
                        ok: false,
                        detail: e.to_string(),
                    },
                ));
            }
        }
    }

    let t = Instant::now();
    let hopf = verify_hopf(6);
    let t_hopf = t.elapsed();
    let hopf_checks = hopf.as_ref().map(|h| h.checks.clone()).unwrap_or_default();
    let o = require(
        &hopf_checks,
        &[
            "hopf_homomorphism",
            "hopf_coassociativity",
            "counit_axioms",
            "antipode_left_axiom",
            "antipode_right_axiom",
        ],
    );
    lines.push(("7 Hopf axioms at order 6".into(), timed(Duration::from_secs(10), t_hopf, o)));

    match rmatrix::verify_rmatrix(6) {
        Ok(r) => {
            let o = require(
                &r.checks,
                &["r_first_order", "r_inverse", "qybe", "qybe_negative_control", "intertwining"],
            );
            lines.push(("8 universal R at order 6".into(), o));
            let o = require(
                &r.checks,
                &["rep_classical_relations", "rep_deformed_relations", "rep_r_matrix", "rep_qybe"],
            );
            lines.push(("9 matrix representation".into(), o));
        }
        Err(e) => {
            for k in ["8 universal R", "9 matrix representation"] {
                lines.push((
                    k.into(),
                    Outcome {
                        ok: false,
                        detail: e.to_string(),
                    },
                ));
            }
        }
    }

    let frt = verify_frt();
    let o = require(
        &frt.checks,
        &["rtt", "rtt_negative_control", "qgroup_coproduct_relations", "qgroup_coassociativity"],
    );
    lines.push((
        "10 FRT quantum group".into(),
        and(o, frt.control_nonzero_entries > 0, format!("control {} nonzero entries", frt.control_nonzero_entries)),
    ));

    let sk = verify_sklyanin();
    let o = require(
        &sk.checks,
        &["sklyanin_antisymmetry", "sklyanin_jacobi", "sklyanin_r_bracket"],
    );
    let sign = match sk.sign {
        SklyaninSign::Plus => "global sign +1",
        SklyaninSign::Minus => "SIGN_MISMATCH: global sign -1",
        SklyaninSign::Neither => "no global sign",
    };
    lines.push(("11 Sklyanin bracket".into(), and(o, sk.sign != SklyaninSign::Neither, sign)));

    let b = boson::verify_boson(6);
    let mut both = hopf_checks.clone();
    both.extend(b.checks.iter().cloned());
    let o = require(&both, &["casimir_central", "classical_casimir_central", "boson_casimir"]);
    lines.push(("12 Casimir".into(), note(o, format!("C = {}", b.casimir))));
    lines.push((
        "13 boson realization".into(),
        require(&b.checks, &["boson_relations", "boson_classical_limit"]),
    ));

    let (agree, cases) = confluence(500);
    let exp_ok = exp_inverse(6);
    let t = Instant::now();
    let first = run_command(["qosc", "verify-all", "--order", "6"]);
    let t_all = t.elapsed();
    let second = run_command(["qosc", "verify-all", "--order", "6"]);
    let (all_pass, deterministic) = match (&first, &second) {
        (Ok((_, a)), Ok((_, b))) => (a.passed(), a.canonical_json() == b.canonical_json()),
        _ => (false, false),
    };
    let o = Outcome {
        ok: agree == cases && exp_ok && all_pass && deterministic,
        detail: format!(
            "confluence {agree}/{cases}; exp inverse {exp_ok}; verify-all {}; deterministic {deterministic}",
            if all_pass { "PASS" } else { "FAIL" }
        ),
    };
    lines.push(("14 engine properties".into(), timed(Duration::from_secs(60), t_all, o)));

    let mut failed = 0;
    for (name, o) in &lines {
        let tag = if o.ok { "PASS" } else { "FAIL" };
        failed += usize::from(!o.ok);
        println!("{tag} {name}: {}", o.detail);
    }
    println!("{} of {} criteria pass", lines.len() - failed, lines.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
