//! Dense matrices over `Poly`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::poly::{reduce_by, Poly};
use super::rat::Rat;
use super::MathError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Poly::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Poly) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, data }
    }

    pub fn from_rat(rows: &[Vec<Rat>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        PolyMatrix::from_fn(r, c, |i, j| Poly::constant(rows[i][j].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Poly)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(k, p)| (k / self.cols, k % self.cols, p))
    }

    /// First nonzero entry, for diagnostics.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &Poly)> {
        self.entries().find(|(_, _, p)| !p.is_zero())
    }

    pub fn scale(&self, c: &Poly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product; index `(i, k), (j, l)` maps to `i*rows(b)+k, j*cols(b)+l`.
    pub fn kron(&self, b: &PolyMatrix) -> PolyMatrix {
        PolyMatrix::from_fn(self.rows * b.rows, self.cols * b.cols, |r, c| {
            let a = self.get(r / b.rows, c / b.cols);
            if a.is_zero() {
                return Poly::zero();
            }
            a * b.get(r % b.rows, c % b.cols)
        })
    }

    pub fn commutator(&self, other: &PolyMatrix) -> PolyMatrix {
        &(self * other) - &(other * self)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<Poly, MathError> {
        if self.rows != self.cols {
            return Err(MathError::Shape);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one());
        }
        let mut m: Vec<Vec<Poly>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = 1i64;
        let mut prev = Poly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(Poly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = reduce_by(&num, &prev)?;
                }
            }
            prev = m[k][k].clone();
        }
        Ok(m[n - 1][n - 1].scale(&Rat::from_integer(sign.into())))
    }

    /// Classical adjugate: `self * adj = det * I`.
    pub fn adjugate(&self) -> Result<PolyMatrix, MathError> {
        let n = self.rows;
        if n != self.cols {
            return Err(MathError::Shape);
        }
        if n == 1 {
            return Ok(PolyMatrix::identity(1));
        }
        let mut out = PolyMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = PolyMatrix::from_fn(n - 1, n - 1, |r, c| {
                    let rr = if r < j { r } else { r + 1 };
                    let cc = if c < i { c } else { c + 1 };
                    self.get(rr, cc).clone()
                });
                let d = minor.det()?;
                out.set(i, j, if (i + j) % 2 == 0 { d } else { -d });
            }
        }
        Ok(out)
    }
}

impl<'a> Mul<&'a PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &'a PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = PolyMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &'a PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &'a PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::poly;

    fn m(rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_fn(rows.len(), rows[0].len(), |i, j| poly(rows[i][j]))
    }

    #[test]
    fn determinant_and_adjugate() {
        let a = m(&[&["a1", "0", "0", "a5"], &["0", "a1", "0", "0"], &["0", "0", "a1", "0"], &["0", "0", "0", "a1"]]);
        assert_eq!(a.det().unwrap(), poly("a1^4"));
        let adj = a.adjugate().unwrap();
        assert_eq!(&a * &adj, PolyMatrix::identity(4).scale(&poly("a1^4")));
        let b = m(&[&["0", "1"], &["1", "0"]]);
        assert_eq!(b.det().unwrap(), poly("-1"));
        let sing = m(&[&["x", "y"], &["2*x", "2*y"]]);
        assert_eq!(sing.det().unwrap(), Poly::zero());
    }

    #[test]
    fn kron_indexing() {
        let a = m(&[&["1", "2"], &["3", "4"]]);
        let id = PolyMatrix::identity(2);
        let k = a.kron(&id);
        assert_eq!(k.get(2, 0), &poly("3"));
        assert_eq!(k.get(3, 1), &poly("3"));
        assert_eq!(k.get(3, 0), &Poly::zero());
        let k2 = id.kron(&a);
        assert_eq!(k2.get(1, 0), &poly("3"));
        assert_eq!(k2.get(3, 2), &poly("3"));
    }
}
