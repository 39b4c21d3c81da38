//! Helpers around [`BigRational`]: construction, parsing and the `"p/q"`
//! string form used in serialized output.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::InvalidArgument(format!("not a rational number: {text:?}"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::InvalidArgument("zero denominator".into()));
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Exact `x^e` for a possibly negative exponent. `x` must be nonzero when `e < 0`.
pub fn pow_i64(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut acc = BigRational::one();
    let mut b = base;
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        k >>= 1;
    }
    acc
}

/// Largest integer `<= x`.
pub fn floor_to_int(x: &BigRational) -> BigInt {
    let (quot, rem) = x.numer().div_mod_floor(x.denom());
    debug_assert!(!rem.is_negative());
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse() {
        assert_eq!(format_rational(&q_frac(6, -4)), "-3/2");
        assert_eq!(format_rational(&q(7)), "7");
        assert_eq!(parse_rational(" -3/2 ").unwrap(), q_frac(-3, 2));
        assert_eq!(parse_rational("4/2").unwrap(), q(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn canonical_zero() {
        let z = q_frac(0, -5);
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!(format_rational(&z), "0");
    }

    #[test]
    fn powers_and_floor() {
        assert_eq!(pow_i64(&q(-2), 3), q(-8));
        assert_eq!(pow_i64(&q(2), -2), q_frac(1, 4));
        assert_eq!(floor_to_int(&q_frac(-7, 2)), BigInt::from(-4));
        assert_eq!(floor_to_int(&q_frac(7, 2)), BigInt::from(3));
    }
}
