#![allow(clippy::needless_range_loop)]

use super::coord::{QCoordAlgebra, QElem, QGen};
use crate::check::Check;
use crate::math::{Poly, PolyMatrix, Symbol};
use crate::pbw::osc;
use crate::rmatrix::{group_element, Rep};

/// Commutative coordinates `m, a-, a+, E` of the classical group.
pub const COORDS: [&str; 4] = ["m", "am", "ap", "E"];

/// The candidate Poisson bracket on coordinates: `{E, a+} = E(E - 1)`,
/// `{E, a-} = 0`, `{E, m} = E a-`, `{a-, a+} = a-`, `{a+, m} = a- a+`,
/// `{a-, m} = -a-^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketTable {
    table: [[Poly; 4]; 4],
}

fn v(s: &str) -> Poly {
    Poly::var(s)
}

impl BracketTable {
    pub fn candidate() -> BracketTable {
        let (am, ap, e) = (v("am"), v("ap"), v("E"));
        let pairs = [
            ((3, 2), &(&e * &e) - &e),
            ((3, 1), Poly::zero()),
            ((3, 0), &e * &am),
            ((1, 2), am.clone()),
            ((2, 0), &am * &ap),
            ((1, 0), -&(&am * &am)),
        ];
        BracketTable::from_pairs(&pairs)
    }

    pub fn from_pairs(pairs: &[((usize, usize), Poly)]) -> BracketTable {
        let mut table: [[Poly; 4]; 4] = Default::default();
        for ((i, j), p) in pairs {
            table[*i][*j] = p.clone();
            table[*j][*i] = -p;
        }
        BracketTable { table }
    }

    /// The z-linear part of every commutator of the quantum coordinates,
    /// divided by z, with `E^-1` excluded.
    pub fn from_quantum(q: &QCoordAlgebra) -> BracketTable {
        let gens = [QGen::M, QGen::Am, QGen::Ap, QGen::E];
        let z = Symbol::new("z");
        let mut pairs = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                let c = q.commutator(&QElem::gen(gens[i]), &QElem::gen(gens[j]));
                let first = to_commutative(&c.map_coeffs(|p| {
                    p.coefficients_in(&z).get(1).cloned().unwrap_or_default()
                }));
                pairs.push(((i, j), first));
            }
        }
        BracketTable::from_pairs(&pairs)
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.table[i][j]
    }

    /// `{f, g} = sum ∂f/∂x ∂g/∂y {x, y}`.
    pub fn bracket(&self, f: &Poly, g: &Poly) -> Poly {
        let syms: Vec<Symbol> = COORDS.iter().map(|s| Symbol::new(s)).collect();
        let df: Vec<Poly> = syms.iter().map(|s| f.derivative(s)).collect();
        let dg: Vec<Poly> = syms.iter().map(|s| g.derivative(s)).collect();
        let mut out = Poly::zero();
        for i in 0..4 {
            if df[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if dg[j].is_zero() || self.table[i][j].is_zero() {
                    continue;
                }
                out += &(&(&df[i] * &dg[j]) * &self.table[i][j]);
            }
        }
        out
    }
}

/// Reads a coordinate element with nonnegative `E` powers as a commutative
/// polynomial.
pub fn to_commutative(x: &QElem) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in x.terms() {
        assert!(m.e >= 0, "negative power of E has no polynomial image");
        let t = &(&(&v("m").pow(m.m) * &v("am").pow(m.am)) * &v("ap").pow(m.ap)) * &v("E").pow(m.e as u32);
        out += &(&t * c);
    }
    out
}

/// `{T ⊗, T}` as a 9x9 matrix, entry `((i,k),(j,l)) = {T_ij, T_kl}`.
pub fn bracket_matrix(table: &BracketTable, t: &PolyMatrix) -> PolyMatrix {
    let d = t.rows();
    PolyMatrix::from_fn(d * d, d * d, |a, b| {
        let (i, k) = (a / d, a % d);
        let (j, l) = (b / d, b % d);
        table.bracket(t.get(i, j), t.get(k, l))
    })
}

/// `ρ = D(N)⊗D(A+) - D(A+)⊗D(N)`.
pub fn rho() -> PolyMatrix {
    let rep = Rep::oscillator();
    let n = &rep.mats[osc::N];
    let ap = &rep.mats[osc::AP];
    &n.kron(ap) - &ap.kron(n)
}

/// Outcome of comparing `{T ⊗, T}` with `[ρ, T ⊗ T]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SklyaninSign {
    Plus,
    /// Equality holds only after a global sign flip.
    Minus,
    Neither,
}

pub fn sklyanin_sign(table: &BracketTable) -> SklyaninSign {
    let t = group_element();
    let lhs = bracket_matrix(table, &t);
    let tt = t.kron(&t);
    let r = rho();
    let rhs = &(&r * &tt) - &(&tt * &r);
    if (&lhs - &rhs).is_zero() {
        SklyaninSign::Plus
    } else if (&lhs + &rhs).is_zero() {
        SklyaninSign::Minus
    } else {
        SklyaninSign::Neither
    }
}

/// Antisymmetry on matrix entries, Jacobi on coordinates, agreement with
/// the quantum commutators at first order, and the r-matrix bracket.
pub fn sklyanin_checks(q: &QCoordAlgebra) -> (Vec<Check>, SklyaninSign) {
    let table = BracketTable::candidate();
    let mut checks = Vec::new();

    let derived = BracketTable::from_quantum(q);
    let mut bad = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if derived.get(i, j) != table.get(i, j) {
                bad.push(format!("{{{}, {}}}", COORDS[i], COORDS[j]));
            }
        }
    }
    checks.push(Check::new(
        "sklyanin_quantization_first_order",
        bad.is_empty(),
        if bad.is_empty() {
            "z-linear part of every coordinate commutator equals z times the bracket".to_string()
        } else {
            format!("mismatch at {}", bad.join(", "))
        },
    ));

    let t = group_element();
    let mut asym = true;
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for e in 0..3 {
                    let x = table.bracket(t.get(a, b), t.get(c, e));
                    let y = table.bracket(t.get(c, e), t.get(a, b));
                    asym &= (&x + &y).is_zero();
                }
            }
        }
    }
    checks.push(Check::new("sklyanin_antisymmetry", asym, "{T_ij, T_kl} = -{T_kl, T_ij}"));

    let mut bad = Vec::new();
    let vars: Vec<Poly> = COORDS.iter().map(|s| v(s)).collect();
    for i in 0..4 {
        for j in i + 1..4 {
            for k in j + 1..4 {
                let (x, y, w) = (&vars[i], &vars[j], &vars[k]);
                let s = &(&table.bracket(x, &table.bracket(y, w)) + &table.bracket(y, &table.bracket(w, x)))
                    + &table.bracket(w, &table.bracket(x, y));
                if !s.is_zero() {
                    bad.push(format!("({}, {}, {})", COORDS[i], COORDS[j], COORDS[k]));
                }
            }
        }
    }
    checks.push(Check::new(
        "sklyanin_jacobi",
        bad.is_empty(),
        if bad.is_empty() {
            "Jacobi holds on all coordinate triples".to_string()
        } else {
            format!("fails on {}", bad.join(", "))
        },
    ));

    let sign = sklyanin_sign(&table);
    checks.push(match sign {
        SklyaninSign::Plus => Check::pass("sklyanin_r_bracket", "{T ⊗, T} = [ρ, T ⊗ T]"),
        SklyaninSign::Minus => Check::pass(
            "sklyanin_r_bracket",
            "SIGN_MISMATCH: {T ⊗, T} = -[ρ, T ⊗ T], equality up to a global sign",
        ),
        SklyaninSign::Neither => Check::fail("sklyanin_r_bracket", "{T ⊗, T} differs from ±[ρ, T ⊗ T]"),
    });
    (checks, sign)
}
