//! Line-oriented text format for Lie algebras.
//!
//! ```text
//! # harmonic oscillator algebra
//! basis: N, A+, A-, M
//! [N, A+] = A+
//! [N, A-] = -A-
//! [A-, A+] = M
//! ```
//!
//! * `#` starts a comment that runs to the end of the line; blank lines are
//!   ignored.
//! * The first non-comment line declares the basis as a comma-separated list
//!   of names. A name is `[A-Za-z_][A-Za-z0-9_]*` optionally followed by one
//!   `+`, `-` or `'` that touches a delimiter (space, `,`, `]`, `#` or the end
//!   of the line). So `A+ + M` is two terms but `A+-M` is a syntax error.
//! * Every other line is `[X, Y] = rhs` where `rhs` is `0` or a sum of terms
//!   `[sign] [coefficient ['*']] name` with rational coefficients such as `3`,
//!   `-1/2`. Unlisted brackets are zero; `[Y, X]` follows by antisymmetry.
//!   Listing both orders is allowed only when they agree.

use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use super::algebra::{BracketSpec, LieAlgebra, LieAlgebraSpec};
use super::LieError;
use crate::math::{fmt_rat, parse_rat, Rat};

const MAX_DIM: usize = 64;

/// Parses and validates (antisymmetry, Jacobi) an algebra description.
pub fn parse_lie_algebra(text: &str) -> Result<LieAlgebra, LieError> {
    LieAlgebra::new(&parse_lie_spec(text)?)
}

/// Parses without validating the Lie axioms.
pub fn parse_lie_spec(text: &str) -> Result<LieAlgebraSpec, LieError> {
    let mut spec: Option<LieAlgebraSpec> = None;
    let mut seen: Vec<(usize, usize, usize)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut cur = Cursor {
            src: line.as_bytes(),
            pos: 0,
            line: lineno + 1,
        };
        cur.skip_ws();
        if cur.at_end() {
            continue;
        }
        match &mut spec {
            None => spec = Some(cur.basis_line()?),
            Some(s) => {
                let (b, left_col) = cur.bracket_line(&s.names)?;
                if let Some(&(_, _, first)) = seen
                    .iter()
                    .find(|(l, r, _)| (*l, *r) == (b.left, b.right))
                {
                    return Err(LieError::Parse {
                        line: lineno + 1,
                        column: left_col,
                        message: format!("bracket already given on line {first}"),
                    });
                }
                seen.push((b.left, b.right, lineno + 1));
                s.brackets.push(b);
            }
        }
    }
    spec.ok_or(LieError::Parse {
        line: text.lines().count().max(1),
        column: 1,
        message: "missing basis declaration".into(),
    })
}

/// Writes an algebra in the format accepted by [`parse_lie_algebra`].
pub fn write_lie_algebra(alg: &LieAlgebra) -> String {
    let mut out = format!("basis: {}\n", alg.names().join(", "));
    for b in alg.spec().brackets {
        let terms: Vec<String> = b
            .result
            .iter()
            .enumerate()
            .map(|(i, (k, c))| {
                let sign = if c.is_negative() { "-" } else if i > 0 { "+" } else { "" };
                let mag = c.abs();
                let coef = if mag.is_one() { String::new() } else { format!("{}*", fmt_rat(&mag)) };
                let sep = if i > 0 { " " } else { "" };
                format!("{sep}{sign}{}{coef}{}", if i > 0 { " " } else { "" }, alg.name(*k))
            })
            .collect();
        let _ = writeln!(
            out,
            "[{}, {}] = {}",
            alg.name(b.left),
            alg.name(b.right),
            terms.concat()
        );
    }
    out
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
}

impl Cursor<'_> {
    fn error(&self, message: impl Into<String>) -> LieError {
        LieError::Parse {
            line: self.line,
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), LieError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn is_delim(&self, at: usize) -> bool {
        match self.src.get(at) {
            None => true,
            Some(c) => c.is_ascii_whitespace() || matches!(c, b',' | b']'),
        }
    }

    fn name(&mut self) -> Result<String, LieError> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => self.pos += 1,
            _ => return Err(self.error("expected a basis name")),
        }
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
        }
        if matches!(self.src.get(self.pos), Some(b'+' | b'-' | b'\'')) && self.is_delim(self.pos + 1) {
            self.pos += 1;
        }
        if !self.is_delim(self.pos) {
            return Err(self.error("unexpected character after name"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn basis_line(&mut self) -> Result<LieAlgebraSpec, LieError> {
        for &c in b"basis" {
            if self.src.get(self.pos) != Some(&c) {
                return Err(self.error("expected 'basis:' declaration"));
            }
            self.pos += 1;
        }
        self.expect(b':')?;
        let mut names: Vec<String> = Vec::new();
        if self.peek().is_none() {
            return Ok(LieAlgebraSpec::default());
        }
        loop {
            let col = self.pos;
            let n = self.name()?;
            if names.contains(&n) {
                self.pos = col;
                self.skip_ws();
                return Err(self.error(format!("duplicate basis name {n:?}")));
            }
            names.push(n);
            if names.len() > MAX_DIM {
                return Err(self.error(format!("more than {MAX_DIM} basis elements")));
            }
            match self.peek() {
                None => break,
                Some(b',') => self.pos += 1,
                Some(_) => return Err(self.error("expected ',' or end of line")),
            }
        }
        Ok(LieAlgebraSpec {
            names,
            brackets: Vec::new(),
        })
    }

    fn lookup(&mut self, names: &[String]) -> Result<usize, LieError> {
        self.skip_ws();
        let col = self.pos;
        let n = self.name()?;
        names.iter().position(|x| *x == n).ok_or_else(|| {
            self.pos = col;
            self.error(format!("unknown basis name {n:?}"))
        })
    }

    fn bracket_line(&mut self, names: &[String]) -> Result<(BracketSpec, usize), LieError> {
        self.expect(b'[')?;
        let left_col = self.pos + 1;
        let left = self.lookup(names)?;
        self.expect(b',')?;
        let right = self.lookup(names)?;
        self.expect(b']')?;
        self.expect(b'=')?;
        let mut result: Vec<(usize, Rat)> = Vec::new();
        let mut first = true;
        loop {
            let mut sign = Rat::one();
            match self.peek() {
                None if first => return Err(self.error("expected right-hand side")),
                None => break,
                Some(b'+') if !first => self.pos += 1,
                Some(b'-') => {
                    self.pos += 1;
                    sign = -sign;
                }
                Some(_) if !first => return Err(self.error("expected '+' or '-'")),
                Some(_) => {}
            }
            self.skip_ws();
            let coef = if self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_digit() || *c == b'/')
                {
                    self.pos += 1;
                }
                let lit = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let c = parse_rat(lit).map_err(|e| {
                    self.pos = start;
                    self.error(e.to_string())
                })?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                }
                Some(c)
            } else {
                None
            };
            // A bare `0` stands for the zero vector.
            if first && coef.as_ref().is_some_and(Zero::is_zero) && self.peek().is_none() {
                break;
            }
            let k = self.lookup(names)?;
            result.push((k, sign * coef.unwrap_or_else(Rat::one)));
            first = false;
        }
        Ok((BracketSpec { left, right, result }, left_col))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::h4_algebra;
    use crate::math::rat;

    const H4: &str = "# oscillator\nbasis: N, A+, A-, M\n[N, A+] = A+\n[N, A-] = -A-   # sign\n\n[A-, A+] = M\n";

    #[test]
    fn parses_h4() {
        assert_eq!(parse_lie_algebra(H4).unwrap(), h4_algebra());
    }

    #[test]
    fn writer_round_trips() {
        let h = h4_algebra();
        assert_eq!(parse_lie_algebra(&write_lie_algebra(&h)).unwrap(), h);
        let text = "basis: X, Y, Z\n[X, Y] = -1/2*Z + 3 X\n[X, Z] = 0\n";
        let spec = parse_lie_spec(text).unwrap();
        assert_eq!(spec.brackets[0].result, vec![(2, rat(-1, 2)), (0, rat(3, 1))]);
        assert!(spec.brackets[1].result.is_empty());
    }

    #[test]
    fn one_dimensional_and_empty_basis() {
        let a = parse_lie_algebra("basis: H\n").unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(parse_lie_algebra("basis:").unwrap().dim(), 0);
    }

    fn err_at(text: &str) -> (usize, usize) {
        match parse_lie_spec(text) {
            Err(LieError::Parse { line, column, .. }) => (line, column),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn reports_line_and_column() {
        assert_eq!(err_at("basis: X, Y\n[X, Q] = X\n"), (2, 5));
        assert_eq!(err_at("basis: X, Y\n[X, Y] = X +\n"), (2, 13));
        assert_eq!(err_at("basis: X, X\n"), (1, 11));
        assert_eq!(err_at("[X, Y] = X\n"), (1, 1));
        assert_eq!(err_at("basis: A, B\n[A, B] = A+-B\n"), (2, 11));
        assert_eq!(err_at("basis: A, B\n[A, B] = 1/0 A\n"), (2, 10));
        assert_eq!(err_at("basis: A, B\n[A, B] = A\n[A, B] = B\n"), (3, 2));
        assert_eq!(err_at("# nothing\n"), (1, 1));
    }

    #[test]
    fn semantic_errors_after_parsing() {
        let bad = "basis: X1, X2, X3\n[X1, X2] = X3\n[X1, X3] = X1\n";
        assert_eq!(parse_lie_algebra(bad), Err(LieError::JacobiViolation(0, 1, 2)));
        let asym = "basis: X, Y\n[X, Y] = X\n[Y, X] = X\n";
        assert_eq!(parse_lie_algebra(asym), Err(LieError::NotAntisymmetric(1, 0)));
    }
}
