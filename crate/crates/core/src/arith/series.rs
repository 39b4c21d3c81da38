//! Truncated power series `Q[h] / (h^(K+1))`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::rational::format_rational;
use super::ring::Ring;

/// Exactly `order + 1` rational coefficients; index `i` holds the coefficient of `h^i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        TruncSeries::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Pads with zeros or truncates so that exactly `order + 1` coefficients remain.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest `i` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> TruncSeries {
        assert!(order <= self.order(), "cannot raise truncation order");
        TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn check_order(&self, rhs: &TruncSeries) {
        assert_eq!(
            self.order(),
            rhs.order(),
            "truncated series of different orders"
        );
    }
}

/// `(-e^h)^m = (-1)^m * sum_i (m h)^i / i!`, truncated at `h^order`.
fn minus_exp_power(m: i64, order: usize) -> Vec<BigRational> {
    let sign = if m % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let m = BigInt::from(m);
    let mut out = Vec::with_capacity(order + 1);
    let mut term = BigRational::from_integer(sign);
    out.push(term.clone());
    for i in 1..=order {
        term *= BigRational::new(m.clone(), BigInt::from(i));
        out.push(term.clone());
    }
    out
}

/// Substitutes `t = -e^h` into a Laurent polynomial and expands to order `order`.
pub fn series_from_laurent_at_minus_exp_h(p: &LaurentPoly, order: usize) -> TruncSeries {
    let mut acc = vec![BigRational::zero(); order + 1];
    for (e, c) in p.terms() {
        let c = BigRational::from_integer(c.clone());
        for (slot, x) in acc.iter_mut().zip(minus_exp_power(e, order)) {
            *slot += &c * x;
        }
    }
    TruncSeries { coeffs: acc }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.check_order(rhs);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.check_order(rhs);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.check_order(rhs);
        let n = self.coeffs.len();
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncSeries { coeffs }
    }
}

impl Ring for TruncSeries {
    fn zero_like(&self) -> Self {
        TruncSeries::zero(self.order())
    }
    fn one_like(&self) -> Self {
        TruncSeries::one(self.order())
    }
    fn vanishes(&self) -> bool {
        TruncSeries::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn compatible(&self, other: &Self) -> bool {
        self.order() == other.order()
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = format_rational(&c.abs());
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*h")?,
                _ => write!(f, "{mag}*h^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(h^{})", self.order() + 1)
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries({self})")
    }
}
