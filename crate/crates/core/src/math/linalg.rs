//! Exact linear algebra: rational nullspaces and fraction-free parametric
//! solving over the polynomial ring.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::{reduce_by, Poly};
use super::rat::Rat;
use super::MathError;

/// A quotient of polynomials. Only cancelled when division is exact.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Frac {
    pub num: Poly,
    pub den: Poly,
}

impl Frac {
    pub fn poly(p: Poly) -> Self {
        Frac {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn new(num: Poly, den: Poly) -> Result<Self, MathError> {
        if den.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        let mut f = Frac { num, den };
        f.cancel();
        Ok(f)
    }

    /// Tries exact division of the numerator by the denominator, and
    /// normalizes constant denominators to 1.
    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        if let Ok(q) = reduce_by(&self.num, &self.den) {
            self.num = q;
            self.den = Poly::one();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn into_poly(self) -> Result<Poly, MathError> {
        if self.den.is_one() {
            Ok(self.num)
        } else {
            Err(MathError::NotMultiple)
        }
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// An affine solution set `particular + span(kernel)`, valid wherever every
/// polynomial in `assumptions` is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionSet {
    pub particular: Vec<Frac>,
    pub kernel: Vec<Vec<Poly>>,
    pub assumptions: Vec<Poly>,
}

impl SolutionSet {
    pub fn dimension(&self) -> usize {
        self.kernel.len()
    }

    /// The particular solution when it is polynomial.
    pub fn particular_poly(&self) -> Result<Vec<Poly>, MathError> {
        self.particular.iter().cloned().map(Frac::into_poly).collect()
    }

    /// Whether `x` lies in the affine set, decided by exact linear algebra
    /// over the rationals after clearing nothing: `x - particular` must be a
    /// combination of kernel vectors with constant coefficients.
    pub fn contains(&self, x: &[Poly]) -> bool {
        let Ok(part) = self.particular_poly() else {
            return false;
        };
        let diff: Vec<Poly> = x.iter().zip(&part).map(|(a, b)| a - b).collect();
        if self.kernel.is_empty() {
            return diff.iter().all(Poly::is_zero);
        }
        // Solve kernel^T c = diff with polynomial unknown coefficients c.
        let rows = diff.len();
        let mat: Vec<Vec<Poly>> = (0..rows)
            .map(|i| self.kernel.iter().map(|v| v[i].clone()).collect())
            .collect();
        solve_affine(&mat, &diff).is_ok()
    }
}

/// Exact nullspace of a rational matrix via reduced row echelon form.
pub fn nullspace(matrix: &[Vec<Rat>]) -> SolutionSet {
    let cols = matrix.first().map_or(0, Vec::len);
    let (rref, pivots) = rref(matrix, cols);
    let kernel = kernel_from_rref(&rref, &pivots, cols)
        .into_iter()
        .map(|v| v.into_iter().map(Poly::constant).collect())
        .collect();
    SolutionSet {
        particular: vec![Frac::poly(Poly::zero()); cols],
        kernel,
        assumptions: Vec::new(),
    }
}

/// Basis of the rational nullspace as plain vectors.
pub fn nullspace_basis(matrix: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let (rref, pivots) = rref(matrix, cols);
    kernel_from_rref(&rref, &pivots, cols)
}

/// Reduced row echelon form over Q. Returns the nonzero rows and pivot columns.
pub fn rref(matrix: &[Vec<Rat>], cols: usize) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut m: Vec<Vec<Rat>> = matrix.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Rat::one() / &m[row][col];
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    (m, pivots)
}

fn kernel_from_rref(rref: &[Vec<Rat>], pivots: &[usize], cols: usize) -> Vec<Vec<Rat>> {
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (row, &pc) in rref.iter().zip(pivots) {
            v[pc] = -&row[free];
        }
        out.push(v);
    }
    out
}

/// Row echelon over `Q[params]` without dividing: each elimination step
/// multiplies by the pivot. Nonconstant pivots are recorded as assumptions.
///
/// The returned set is valid for generic parameter values, i.e. wherever
/// the assumptions do not vanish. A row `0 = c` with `c` a nonzero
/// polynomial makes the system generically unsolvable.
pub fn solve_affine(matrix: &[Vec<Poly>], rhs: &[Poly]) -> Result<SolutionSet, MathError> {
    let rows = matrix.len();
    if rhs.len() != rows {
        return Err(MathError::Shape);
    }
    let cols = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(MathError::Shape);
    }
    // Augmented rows; last entry is the right-hand side.
    let mut m: Vec<Vec<Poly>> = matrix
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let mut assumptions: Vec<Poly> = Vec::new();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        // Prefer constant pivots, then low degree.
        let Some(p) = (row..rows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| {
                let e = &m[r][col];
                (!e.is_constant(), e.total_degree(), e.len(), r)
            })
        else {
            continue;
        };
        m.swap(row, p);
        let piv = m[row][col].clone();
        if !piv.is_constant() {
            let monic = piv.monic();
            if !assumptions.contains(&monic) {
                assumptions.push(monic);
            }
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, pv) in other.iter_mut().zip(&pivot_row) {
                *x = &(&*x * &piv) - &(&f * pv);
            }
            strip_factors(other, &assumptions);
        }
        pivots.push((row, col));
        row += 1;
    }
    let obstructions: Vec<Poly> = m[row..]
        .iter()
        .map(|r| r[cols].clone())
        .filter(|c| !c.is_zero())
        .collect();
    if !obstructions.is_empty() {
        return Err(MathError::Unsolvable { obstructions });
    }
    let mut particular = vec![Frac::poly(Poly::zero()); cols];
    for &(r, c) in &pivots {
        particular[c] = Frac::new(m[r][cols].clone(), m[r][c].clone())?;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut kernel = Vec::new();
    for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        // Scale by the product of pivots that do not divide the entry.
        let mut v: Vec<Frac> = vec![Frac::poly(Poly::zero()); cols];
        v[free] = Frac::poly(Poly::one());
        for &(r, c) in &pivots {
            v[c] = Frac::new(-&m[r][free], m[r][c].clone())?;
        }
        let mut scale = Poly::one();
        for f in &v {
            if !f.den.is_one() && reduce_by(&scale, &f.den).is_err() {
                scale = &scale * &f.den;
            }
        }
        let vec: Vec<Poly> = v
            .into_iter()
            .map(|f| reduce_by(&(&f.num * &scale), &f.den))
            .collect::<Result<_, _>>()?;
        kernel.push(vec);
    }
    Ok(SolutionSet {
        particular,
        kernel,
        assumptions,
    })
}

/// Divides a row by known nonvanishing factors while the division stays exact.
fn strip_factors(row: &mut [Poly], factors: &[Poly]) {
    for f in factors {
        loop {
            if row.iter().all(Poly::is_zero) {
                return;
            }
            let divided: Result<Vec<Poly>, _> = row.iter().map(|x| reduce_by(x, f)).collect();
            match divided {
                Ok(d) => row.clone_from_slice(&d),
                Err(_) => break,
            }
        }
    }
    // Also clear a common rational factor from the leading entry.
    if let Some(c) = row
        .iter()
        .find(|x| !x.is_zero())
        .and_then(|x| x.leading().map(|(_, c)| c.clone()))
    {
        if !c.is_one() {
            let inv = Rat::one() / c;
            for x in row.iter_mut() {
                *x = x.scale(&inv);
            }
        }
    }
}

/// Multiplies a rational matrix by a vector.
pub fn mat_vec(matrix: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    matrix
        .iter()
        .map(|row| row.iter().zip(v).fold(Rat::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::parse_poly;
    use crate::math::rat::int;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn nullspace_trivial_cases() {
        assert_eq!(nullspace(&[vec![int(0)]]).dimension(), 1);
        let id: Vec<Vec<Rat>> = (0..3)
            .map(|i| (0..3).map(|j| int((i == j) as i64)).collect())
            .collect();
        assert_eq!(nullspace(&id).dimension(), 0);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let m = vec![
            vec![int(1), int(2), int(3), int(4)],
            vec![int(2), int(4), int(6), int(8)],
            vec![int(0), int(1), int(-1), int(0)],
        ];
        let basis = nullspace_basis(&m, 4);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(mat_vec(&m, v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_identity() {
        let id = vec![
            vec![Poly::one(), Poly::zero()],
            vec![Poly::zero(), Poly::one()],
        ];
        let b = vec![p("a1 + 1"), p("a2^2")];
        let sol = solve_affine(&id, &b).unwrap();
        assert_eq!(sol.particular_poly().unwrap(), b);
        assert!(sol.kernel.is_empty());
        assert!(sol.assumptions.is_empty());
    }

    #[test]
    fn exact_division_records_pivot() {
        let sol = solve_affine(&[vec![p("a1")]], &[p("a1*a4")]).unwrap();
        assert_eq!(sol.particular_poly().unwrap(), vec![p("a4")]);
        assert_eq!(sol.assumptions, vec![p("a1")]);
    }

    #[test]
    fn inexact_division_keeps_denominator() {
        let sol = solve_affine(&[vec![p("a1")]], &[p("a2")]).unwrap();
        assert_eq!(sol.particular[0].num, p("a2"));
        assert_eq!(sol.particular[0].den, p("a1"));
    }

    #[test]
    fn inconsistent_system_is_unsolvable() {
        let m = vec![vec![Poly::one(), Poly::one()], vec![Poly::one(), Poly::one()]];
        match solve_affine(&m, &[p("a1"), p("a2")]) {
            Err(MathError::Unsolvable { obstructions }) => {
                assert_eq!(obstructions.len(), 1);
                assert_eq!(obstructions[0].monic(), p("a1 - a2"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parametric_kernel_is_polynomial() {
        // a1 x + a2 y = 0 has kernel spanned by (-a2, a1).
        let sol = solve_affine(&[vec![p("a1"), p("a2")]], &[Poly::zero()]).unwrap();
        assert_eq!(sol.kernel.len(), 1);
        let v = &sol.kernel[0];
        let check = &(&p("a1") * &v[0]) + &(&p("a2") * &v[1]);
        assert!(check.is_zero());
        assert!(!v[1].is_zero());
    }
}
