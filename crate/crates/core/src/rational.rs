//! Arbitrary-precision rational scalars.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator. This module adds the textual
//! form used on the command line and in reports (`"p/q"`, or `"p"` when
//! `q = 1`) and a checked four-function entry point.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den`, reduced. Panics on `den == 0`; meant for literals.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn arith(a: &Rational, b: &Rational, op: ArithOp) -> Result<Rational> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => {
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            a / b
        }
    })
}

/// Parses `"p/q"` or `"p"` with optional sign. Decimal notation is rejected.
pub fn parse(input: &str) -> Result<Rational> {
    let err = |reason: &str| Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let s = input.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num = BigInt::from_str(num).map_err(|_| err("numerator is not an integer"))?;
    let den = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| err("denominator is not an integer"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Canonical text: `"p/q"` with the sign on `p`, or `"p"` when `q = 1`.
pub fn format(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// The value as a `usize` when it is a nonnegative integer that fits.
pub fn to_nonneg_usize(r: &Rational) -> Option<usize> {
    if is_integer(r) && !r.is_negative() {
        r.numer().to_usize()
    } else {
        None
    }
}

/// True when the stored form is already reduced with a positive denominator.
pub fn is_canonical(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

pub fn pow2(k: i64) -> Rational {
    let p = Rational::from_integer(BigInt::from(2)).pow(k.unsigned_abs() as i32);
    if k < 0 {
        p.recip()
    } else {
        p
    }
}

pub fn sign_pow(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_thirds() {
        assert_eq!(arith(&frac(1, 2), &frac(1, 3), ArithOp::Add).unwrap(), frac(5, 6));
    }

    #[test]
    fn normalized_on_construction() {
        let r = frac(2, 4);
        assert_eq!(r.numer(), &BigInt::from(1));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert!(is_canonical(&frac(-6, -4)));
        assert_eq!(format(&frac(6, -4)), "-3/2");
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            arith(&frac(1, 2), &int(0), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("-1/2").unwrap(), frac(-1, 2));
        assert_eq!(parse("7").unwrap(), int(7));
        assert_eq!(parse(" 4/6 ").unwrap(), frac(2, 3));
        assert_eq!(parse("1/-3").unwrap(), frac(-1, 3));
        assert!(parse("0.5").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("").is_err());
        assert!(parse("a/b").is_err());
        assert_eq!(format(&int(-5)), "-5");
        assert_eq!(format(&frac(7, 3)), "7/3");
    }

    #[test]
    fn integer_helpers() {
        assert_eq!(to_nonneg_usize(&int(3)), Some(3));
        assert_eq!(to_nonneg_usize(&int(-1)), None);
        assert_eq!(to_nonneg_usize(&frac(1, 2)), None);
        assert_eq!(pow2(-2), frac(1, 4));
        assert_eq!(pow2(3), int(8));
    }
}
