//! Arbitrary-precision rationals.
//!
//! `Rat` is `num_rational::BigRational`, which already keeps the canonical
//! reduced form (positive denominator, coprime parts). This module adds the
//! handful of constructors and a strict text parser used by the input formats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::MathError;

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn factorial(n: u32) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Rat::from_integer(acc)
}

/// Parses `[-+]?digits(/digits)?`. Whitespace is not accepted.
pub fn parse_rat(text: &str) -> Result<Rat, MathError> {
    let bad = || MathError::BadRational(text.to_string());
    let (neg, body) = match text.as_bytes().first() {
        Some(b'-') => (true, &text[1..]),
        Some(b'+') => (false, &text[1..]),
        _ => (false, text),
    };
    let (n, d) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(n) || d.is_some_and(|d| !digits(d)) {
        return Err(bad());
    }
    let num: BigInt = n.parse().map_err(|_| bad())?;
    let den: BigInt = match d {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(MathError::ZeroDenominator);
    }
    let r = Rat::new(num, den);
    Ok(if neg { -r } else { r })
}

/// Formats `r` compactly: `3`, `-1/2`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_forms() {
        assert_eq!(parse_rat("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rat("-7").unwrap(), int(-7));
        assert_eq!(parse_rat("+0/5").unwrap(), int(0));
        let r = parse_rat("-10/-1");
        assert!(r.is_err());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "-", "1/", "/2", "1.5", "1 /2", "0x10", "1/0"] {
            assert!(parse_rat(s).is_err(), "{s:?}");
        }
    }

    #[test]
    fn reduced_form_invariant() {
        let r = rat(-12, -18);
        assert_eq!(r.numer(), &BigInt::from(2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(fmt_rat(&rat(4, -6)), "-2/3");
        assert_eq!(factorial(5), int(120));
    }
}
