use num_traits::Zero;

use super::LieError;
use crate::math::{int, Rat};

/// One bracket entry: `[X_i, X_j] = sum_k c_k X_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketSpec {
    pub left: usize,
    pub right: usize,
    pub result: Vec<(usize, Rat)>,
}

/// Unvalidated description of a Lie algebra.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct LieAlgebraSpec {
    pub names: Vec<String>,
    pub brackets: Vec<BracketSpec>,
}

/// A finite-dimensional Lie algebra over Q, given by structure constants
/// `[X_i, X_j] = sum_k c[i][j][k] X_k`. Antisymmetry and the Jacobi identity
/// hold exactly for every value of this type.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    names: Vec<String>,
    consts: Vec<Vec<Vec<Rat>>>,
}

impl LieAlgebra {
    pub fn new(spec: &LieAlgebraSpec) -> Result<Self, LieError> {
        let n = spec.names.len();
        let mut consts = vec![vec![vec![Rat::zero(); n]; n]; n];
        let mut seen = vec![vec![false; n]; n];
        for b in &spec.brackets {
            let (i, j) = (b.left, b.right);
            if i >= n || j >= n {
                return Err(LieError::IndexOutOfRange(i.max(j)));
            }
            let mut v = vec![Rat::zero(); n];
            for (k, c) in &b.result {
                if *k >= n {
                    return Err(LieError::IndexOutOfRange(*k));
                }
                v[*k] += c;
            }
            if i == j {
                if v.iter().any(|c| !c.is_zero()) {
                    return Err(LieError::NotAntisymmetric(i, j));
                }
                continue;
            }
            let neg: Vec<Rat> = v.iter().map(|c| -c).collect();
            if seen[i][j] && consts[i][j] != v {
                return Err(LieError::NotAntisymmetric(i, j));
            }
            if seen[j][i] && consts[j][i] != neg {
                return Err(LieError::NotAntisymmetric(j, i));
            }
            seen[i][j] = true;
            seen[j][i] = true;
            consts[i][j] = v;
            consts[j][i] = neg;
        }
        let alg = LieAlgebra {
            names: spec.names.clone(),
            consts,
        };
        if let Some((i, j, k)) = alg.jacobi_violation() {
            return Err(LieError::JacobiViolation(i, j, k));
        }
        Ok(alg)
    }

    /// The first triple `i < j < k` whose Jacobiator is nonzero.
    fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut acc = vec![Rat::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (m, cm) in self.consts[a][b].iter().enumerate() {
                            if cm.is_zero() {
                                continue;
                            }
                            for (t, ct) in self.consts[m][c].iter().enumerate() {
                                acc[t] += cm * ct;
                            }
                        }
                    }
                    if acc.iter().any(|x| !x.is_zero()) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra {
            names: (1..=n).map(|i| format!("X{i}")).collect(),
            consts: vec![vec![vec![Rat::zero(); n]; n]; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Coefficients of `[X_i, X_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> &[Rat] {
        &self.consts[i][j]
    }

    /// Bracket of two general elements given by coordinates.
    pub fn bracket_vec(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let n = self.dim();
        let mut out = vec![Rat::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (k, c) in self.consts[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += xi * yj * c;
                    }
                }
            }
        }
        out
    }

    /// The nonzero brackets `[X_i, X_j]` with `i < j`.
    pub fn spec(&self) -> LieAlgebraSpec {
        let n = self.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let result: Vec<(usize, Rat)> = self.consts[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                if !result.is_empty() {
                    brackets.push(BracketSpec {
                        left: i,
                        right: j,
                        result,
                    });
                }
            }
        }
        LieAlgebraSpec {
            names: self.names.clone(),
            brackets,
        }
    }
}

/// Basis indices of the oscillator algebra in the order N, A+, A-, M.
pub mod h4 {
    pub const N: usize = 0;
    pub const AP: usize = 1;
    pub const AM: usize = 2;
    pub const M: usize = 3;
}

/// The harmonic oscillator algebra:
/// `[N, A+] = A+`, `[N, A-] = -A-`, `[A-, A+] = M`, `M` central.
pub fn h4_algebra() -> LieAlgebra {
    use h4::*;
    let spec = LieAlgebraSpec {
        names: ["N", "A+", "A-", "M"].map(String::from).to_vec(),
        brackets: vec![
            BracketSpec {
                left: N,
                right: AP,
                result: vec![(AP, int(1))],
            },
            BracketSpec {
                left: N,
                right: AM,
                result: vec![(AM, int(-1))],
            },
            BracketSpec {
                left: AM,
                right: AP,
                result: vec![(M, int(1))],
            },
        ],
    };
    LieAlgebra::new(&spec).expect("h4 is a Lie algebra")
}
