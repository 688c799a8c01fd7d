use super::build_r;
use crate::check::Check;
use crate::math::{factorial, Poly, PolyMatrix, Symbol};
use crate::pbw::{classical_h4, deformed_h4, osc, PbwElement, TensorElement};

/// A representation of the four generators (PBW order) by square matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct Rep {
    pub mats: Vec<PolyMatrix>,
}

fn unit(i: usize, j: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(3, 3);
    m.set(i, j, Poly::one());
    m
}

impl Rep {
    /// `D(N) = E22, D(A+) = E23, D(A-) = E12, D(M) = E13` (1-based).
    pub fn oscillator() -> Rep {
        let mut mats = vec![PolyMatrix::zeros(3, 3); 4];
        mats[osc::M] = unit(0, 2);
        mats[osc::AM] = unit(0, 1);
        mats[osc::AP] = unit(1, 2);
        mats[osc::N] = unit(1, 1);
        Rep { mats }
    }

    pub fn size(&self) -> usize {
        self.mats[0].rows()
    }

    fn mono(&self, m: &[u32]) -> PolyMatrix {
        let mut acc = PolyMatrix::identity(self.size());
        for (g, &e) in m.iter().enumerate() {
            for _ in 0..e {
                acc = &acc * &self.mats[g];
            }
        }
        acc
    }
}

fn z() -> Symbol {
    Symbol::new("z")
}

/// `D(e)` with z kept as a polynomial symbol.
pub fn rep_element(rep: &Rep, e: &PbwElement) -> PolyMatrix {
    let n = rep.size();
    let mut out = PolyMatrix::zeros(n, n);
    for (m, c) in e.terms() {
        out = &out + &rep.mono(m).scale(&c.to_poly_in(&z()));
    }
    out
}

/// `D ⊗ ... ⊗ D` applied to a tensor.
pub fn rep_tensor(rep: &Rep, t: &TensorElement) -> PolyMatrix {
    let n = rep.size().pow(t.arity() as u32);
    let mut out = PolyMatrix::zeros(n, n);
    for (k, c) in t.terms() {
        let mut acc = PolyMatrix::identity(1);
        for m in k {
            acc = acc.kron(&rep.mono(m));
        }
        out = &out + &acc.scale(&c.to_poly_in(&z()));
    }
    out
}

pub fn rep_r_matrix(rep: &Rep, r: &TensorElement) -> PolyMatrix {
    rep_tensor(rep, r)
}

/// `R12 R13 R23 - R23 R13 R12` for a matrix `R` acting on `V ⊗ V`.
pub fn matrix_qybe_residual(r: &PolyMatrix) -> PolyMatrix {
    let d = (r.rows() as f64).sqrt().round() as usize;
    let id = PolyMatrix::identity(d);
    let r12 = r.kron(&id);
    let r23 = id.kron(r);
    let r13 = PolyMatrix::from_fn(d * d * d, d * d * d, |row, col| {
        let (a, b, c) = (row / (d * d), (row / d) % d, row % d);
        let (a2, b2, c2) = (col / (d * d), (col / d) % d, col % d);
        if b == b2 {
            r.get(a * d + c, a2 * d + c2).clone()
        } else {
            Poly::zero()
        }
    });
    let lhs = &(&r12 * &r13) * &r23;
    let rhs = &(&r23 * &r13) * &r12;
    &lhs - &rhs
}

/// `exp(X)` for nilpotent `X`.
fn exp_nilpotent(x: &PolyMatrix) -> PolyMatrix {
    let n = x.rows();
    let mut acc = PolyMatrix::identity(n);
    let mut power = PolyMatrix::identity(n);
    for k in 1..=n {
        power = &power * x;
        if power.is_zero() {
            break;
        }
        acc = &acc + &power.scale(&Poly::constant(factorial(k as u32).recip()));
    }
    acc
}

/// The closed form of the group element, with `E = e^n`:
/// `[[1, a- E, m + a- a+], [0, E, a+], [0, 0, 1]]`.
pub fn group_element() -> PolyMatrix {
    let (m, am, ap, e) = (Poly::var("m"), Poly::var("am"), Poly::var("ap"), Poly::var("E"));
    let mut t = PolyMatrix::identity(3);
    t.set(0, 1, &am * &e);
    t.set(0, 2, &m + &(&am * &ap));
    t.set(1, 1, e);
    t.set(1, 2, ap);
    t
}

/// `exp(m D(M)) exp(a- D(A-)) exp(a+ D(A+)) exp(n D(N))`, using
/// `exp(n P) = 1 + (e^n - 1) P` for the idempotent `P = D(N)`.
pub fn group_element_product(rep: &Rep) -> PolyMatrix {
    let factor = |g: usize, s: &str| exp_nilpotent(&rep.mats[g].scale(&Poly::var(s)));
    let dn = &rep.mats[osc::N];
    let last = &PolyMatrix::identity(3) + &dn.scale(&(&Poly::var("E") - &Poly::one()));
    let prod = &(&factor(osc::M, "m") * &factor(osc::AM, "am")) * &factor(osc::AP, "ap");
    &prod * &last
}

fn matrix_check(name: &str, lhs: &PolyMatrix, rhs: &PolyMatrix, what: &str) -> Check {
    let diff = lhs - rhs;
    match diff.first_nonzero() {
        None => Check::pass(name, what.to_string()),
        Some((i, j, p)) => Check::fail(name, format!("{what}: entry ({i}, {j}) off by {p}")),
    }
}

/// Exact checks of the 3x3 representation: classical and deformed
/// relations, the represented R-matrix, the 27x27 QYBE and the group
/// element.
pub fn rep_checks(rep: &Rep) -> Vec<Check> {
    use osc::{AM, AP, M, N};
    let d = &rep.mats;
    let mut checks = Vec::new();

    let classical = classical_h4(1);
    let mut ok = true;
    let mut detail = String::from("every classical bracket holds");
    for j in 0..4 {
        for i in 0..j {
            let lhs = d[j].commutator(&d[i]);
            let rhs = rep_element(rep, classical.relation(j, i));
            if let Some((r, c, p)) = (&lhs - &rhs).first_nonzero() {
                ok = false;
                detail = format!("[{}, {}] entry ({r}, {c}) off by {p}", osc::NAMES[j], osc::NAMES[i]);
            }
        }
    }
    checks.push(Check::new("rep_classical_relations", ok, detail));

    // D(A+)^2 = 0 collapses e^{zA+} to 1 + zA+.
    let nil = (&d[AP] * &d[AP]).is_zero();
    let e = exp_nilpotent(&d[AP].scale(&Poly::var("z")));
    let zp = Poly::var("z");
    let id = PolyMatrix::identity(3);
    let mut ok = nil;
    ok &= (&d[N].commutator(&d[AP]).scale(&zp) - &(&e - &id)).is_zero();
    ok &= (&d[N].commutator(&d[AM]) + &d[AM]).is_zero();
    ok &= (&d[AM].commutator(&d[AP]) - &(&d[M] * &e)).is_zero();
    ok &= (0..4).all(|g| d[M].commutator(&d[g]).is_zero());
    let deformed = deformed_h4(3);
    ok &= (0..4).all(|j| (0..j).all(|i| d[j].commutator(&d[i]) == rep_element(rep, deformed.relation(j, i))));
    checks.push(Check::new(
        "rep_deformed_relations",
        ok,
        "[D(N), D(A+)] = (e^{zD(A+)} - 1)/z, [D(A-), D(A+)] = D(M) e^{zD(A+)}, D(A+)^2 = 0",
    ));

    let formula = &id.kron(&id) + &(&d[N].kron(&d[AP]) - &d[AP].kron(&d[N])).scale(&zp);
    let rep_r = build_r(&deformed_h4(3)).map(|u| rep_r_matrix(rep, &u.r));
    checks.push(match rep_r {
        Ok(m) => matrix_check("rep_r_matrix", &m, &formula, "(D⊗D)(R) = I⊗I + z(D(N)⊗D(A+) - D(A+)⊗D(N))"),
        Err(e) => Check::fail("rep_r_matrix", e.to_string()),
    });
    checks.push(matrix_check(
        "rep_qybe",
        &matrix_qybe_residual(&formula),
        &PolyMatrix::zeros(27, 27),
        "27x27 QYBE residual with z symbolic",
    ));
    checks.push(Check::new(
        "rep_n_idempotent",
        &d[N] * &d[N] == d[N],
        "D(N)^2 = D(N)",
    ));
    checks.push(matrix_check(
        "group_element",
        &group_element_product(rep),
        &group_element(),
        "product of the four exponentials against the closed form",
    ));
    checks
}
