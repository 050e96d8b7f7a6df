//! Exact rational arithmetic.
//!
//! Every solver-facing quantity is a [`Rational`]: the optimality condition
//! compares against 1/(2N) with a non-strict inequality, and floating point
//! cannot decide the boundary case. Values are always kept in lowest terms
//! with a positive denominator, and no operation rounds or overflows.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number, stored in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for a whole-number rational.
pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Shorthand for `numer / denom` (reduced on construction).
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Largest integer less than or equal to `x`.
pub fn floor_int(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// Smallest integer greater than or equal to `x`.
pub fn ceil_int(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

/// Nearest double-precision approximation, for display only.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses an optionally signed integer or finite decimal literal into an
/// exact rational: `"16"`, `"-3"`, `"0.5"` → 1/2, `".25"` → 1/4.
///
/// Scientific notation and anything else is rejected with
/// [`Error::InvalidLiteral`].
pub fn parse_decimal(literal: &str) -> Result<Rational, Error> {
    let invalid = || Error::InvalidLiteral {
        literal: literal.to_string(),
    };

    let (negative, body) = match literal.as_bytes().first() {
        Some(b'-') => (true, &literal[1..]),
        Some(b'+') => (false, &literal[1..]),
        _ => (false, literal),
    };

    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(invalid());
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(invalid());
    }

    let mut digits = String::with_capacity(int_part.len() + frac_part.len());
    digits.push_str(int_part);
    digits.push_str(frac_part);
    let mut numer = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(invalid)?;
    if negative {
        numer = -numer;
    }
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(Rational::new(numer, denom))
}

/// Zero constant.
pub fn zero() -> Rational {
    Rational::zero()
}
