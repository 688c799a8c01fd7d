use std::time::Instant;

use serde_json::{json, Value};

use qosc::bialgebra::{classify, classify_h4, Classification};
use qosc::check::Check;
use qosc::lie::{parse_lie_algebra, LieAlgebra, LieError};
use qosc::math::{Poly, Symbol};
use qosc::qgroup::SklyaninSign;
use qosc::{boson, hopf, qgroup, rmatrix};

use crate::report::Report;
use crate::{CliError, Command};

pub(crate) fn run(cmd: &Command) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut report = match cmd {
        Command::Classify { algebra, preset } => match (algebra, preset) {
            (Some(path), _) => classify_file(path)?,
            _ => classify_preset(),
        },
        Command::VerifyHopf(o) => with_order("verify-hopf", o.order, hopf_into),
        Command::VerifyRmatrix(o) => with_order("verify-rmatrix", o.order, rmatrix_into),
        Command::VerifyFrt => {
            let mut r = Report::new("verify-frt");
            frt_into(&mut r);
            r
        }
        Command::VerifySklyanin => {
            let mut r = Report::new("verify-sklyanin");
            sklyanin_into(&mut r);
            r
        }
        Command::VerifyBoson(o) => with_order("verify-boson", o.order, boson_into),
        Command::VerifyAll(o) => with_order("verify-all", o.order, |r, n| {
            classify_h4_into(r);
            hopf_into(r, n);
            rmatrix_into(r, n);
            frt_into(r);
            sklyanin_into(r);
            boson_into(r, n);
        }),
    };
    report.timing_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn with_order(command: &str, order: u32, f: impl FnOnce(&mut Report, usize)) -> Report {
    let mut r = Report::new(command);
    r.input("order", order);
    f(&mut r, order as usize);
    r
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(|x| Value::String(x.to_string())).collect())
}

fn pairs(ps: &[(Symbol, Poly)]) -> Value {
    Value::Object(ps.iter().map(|(s, p)| (s.to_string(), Value::String(p.to_string()))).collect())
}

fn classify_preset() -> Report {
    let mut r = Report::new("classify");
    r.input("preset", "h4");
    classify_h4_into(&mut r);
    r
}

fn classify_h4_into(r: &mut Report) {
    let c = match classify_h4() {
        Ok(c) => c,
        Err(e) => return r.push_error("classify_h4", e.to_string()),
    };
    let checks: Vec<&Check> = c.all_checks().collect();
    r.push_checks(checks);
    let names = qosc::lie::h4_algebra().names().to_vec();
    r.table("renaming", pairs(&c.renaming));
    r.table("cojacobi_ideal", strings(&c.classification.ideal));
    let branches: Vec<Value> = c
        .branches
        .iter()
        .map(|b| {
            json!({
                "type": b.kind.name(),
                "constraints": b.constraints.to_string(),
                "cocommutator": b.cocommutator.fmt_with(&names),
                "r_matrix": b.r_matrix.fmt_with(&names),
                "r_identified": b.r_identified.fmt_with(&names),
                "triangularity": b.triangularity_identified.to_string(),
                "schouten": b.schouten.fmt_with(&names),
            })
        })
        .collect();
    r.table("branches", Value::Array(branches));
    r.table("swap_correspondence", pairs(&c.swap_correspondence));
    r.table("shifted_type_a", Value::from(c.shifted_type_a.fmt_with(&names)));
    r.table(
        "locations",
        json!({
            "standard": pairs(&c.standard_location),
            "jordanian": pairs(&c.jordanian_location),
        }),
    );
}

fn classify_file(path: &str) -> Result<Report, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    let mut r = Report::new("classify");
    r.input("algebra", path);
    let alg = match parse_lie_algebra(&text) {
        Ok(a) => a,
        Err(LieError::Parse { line, column, message }) => {
            return Err(CliError::Input {
                path: path.to_string(),
                line,
                column,
                message,
            })
        }
        Err(e) => {
            r.push_error("lie_axioms", e.to_string());
            return Ok(r);
        }
    };
    r.push_checks(&[Check::pass("lie_axioms", format!("dimension {}", alg.dim()))]);
    match classify(&alg) {
        Ok(c) => classification_into(&mut r, &alg, &c),
        Err(e) => r.push_error("classify", e.to_string()),
    }
    Ok(r)
}

fn classification_into(r: &mut Report, alg: &LieAlgebra, c: &Classification) {
    let names = alg.names().to_vec();
    r.push_checks(&c.checks);
    for b in &c.branches {
        r.push_checks(&b.checks);
    }
    r.table(
        "family",
        json!({
            "parameters": strings(&c.family.params),
            "cocommutator": c.family.delta.fmt_with(&names),
        }),
    );
    r.table("cojacobi_ideal", strings(&c.ideal));
    if !c.notes.is_empty() {
        r.table("notes", strings(&c.notes));
    }
    let branches: Vec<Value> = c
        .branches
        .iter()
        .map(|b| {
            let mut v = json!({
                "constraints": b.constraints.to_string(),
                "cocommutator": b.delta.fmt_with(&names),
                "coboundary": b.is_coboundary(),
            });
            if let Some(rp) = &b.r_particular {
                v["r"] = Value::String(rp.fmt_with(&names));
            }
            if let Some(sol) = &b.r_solution {
                v["r_freedom"] = Value::from(sol.dimension());
                if !sol.assumptions.is_empty() {
                    v["assumptions"] = strings(sol.assumptions.iter().map(|p| format!("{p} != 0")));
                }
            }
            v
        })
        .collect();
    r.table("branches", Value::Array(branches));
}

fn hopf_into(r: &mut Report, order: usize) {
    match hopf::verify_hopf(order) {
        Ok(h) => {
            r.push_checks(&h.checks);
            r.table(
                "counit",
                Value::Object(h.counit.iter().map(|(g, s)| (g.clone(), Value::String(s.to_string()))).collect()),
            );
            r.table(
                "antipode",
                Value::Object(h.antipode.iter().map(|(g, s)| (g.clone(), Value::String(s.clone()))).collect()),
            );
            r.table(
                "antipode_squared",
                Value::Object(
                    h.antipode_squared
                        .iter()
                        .map(|(g, s)| (g.clone(), Value::String(s.clone())))
                        .collect(),
                ),
            );
        }
        Err(e) => r.push_error("verify_hopf", e.to_string()),
    }
}

fn rmatrix_into(r: &mut Report, order: usize) {
    match rmatrix::verify_rmatrix(order) {
        Ok(m) => {
            r.push_checks(&m.checks);
            r.table(
                "rmatrix",
                json!({
                    "first_order": m.first_order,
                    "control_residual_terms": m.control_residual_terms,
                    "represented_r": m.represented_r,
                }),
            );
        }
        Err(e) => r.push_error("verify_rmatrix", e.to_string()),
    }
}

fn frt_into(r: &mut Report) {
    let f = qgroup::verify_frt();
    r.push_checks(&f.checks);
    r.table("frt", json!({ "control_nonzero_entries": f.control_nonzero_entries }));
}

fn sklyanin_into(r: &mut Report) {
    let s = qgroup::verify_sklyanin();
    r.push_checks(&s.checks);
    let sign = match s.sign {
        SklyaninSign::Plus => "+1",
        SklyaninSign::Minus => "-1",
        SklyaninSign::Neither => "none",
    };
    r.table("sklyanin", json!({ "global_sign": sign }));
}

fn boson_into(r: &mut Report, order: usize) {
    let b = boson::verify_boson(order);
    r.push_checks(&b.checks);
    r.table("boson", json!({ "casimir": b.casimir }));
}
