//! Exact rationals. Arbitrary precision, always reduced with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_unit(q: &Rational) -> bool {
    q.is_one()
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p`, `p/q` with integer `p`, nonzero `q`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let parse_int = |t: &str| -> Result<BigInt> {
        let t = t.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Sign of `(-1)^n` as a rational.
pub fn sign(negative: bool) -> Rational {
    if negative {
        -Rational::one()
    } else {
        Rational::one()
    }
}

pub fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(parse("-1/2").unwrap(), frac(-1, 2));
        assert_eq!(parse("4/8").unwrap(), frac(1, 2));
        assert_eq!(parse("3/-6").unwrap(), frac(-1, 2));
        assert_eq!(to_string(&frac(6, -4)), "-3/2");
        assert_eq!(to_string(&int(7)), "7");
        assert!(parse("1/0").is_err());
        assert!(parse("").is_err());
        assert!(parse("1/").is_err());
        assert!(parse("--1").is_err());
        assert!(parse("1.5").is_err());
    }

    #[test]
    fn stored_reduced() {
        let q = frac(-12, -18);
        assert_eq!(q.numer(), &BigInt::from(2));
        assert_eq!(q.denom(), &BigInt::from(3));
    }
}
