//! Lossless JSON encodings: rationals as `"p/q"` strings and Laurent
//! polynomials as `{exponent: coefficient}` maps with string keys.

use jones_core::arith::{format_rational, BigInt, BigRational, LaurentPoly, Ring, SquareMatrix};
use serde_json::{Map, Value};

pub fn rational(x: &BigRational) -> Value {
    Value::String(format_rational(x))
}

pub fn integer(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn laurent(p: &LaurentPoly) -> Value {
    let map: Map<String, Value> = p
        .terms()
        .map(|(e, c)| (e.to_string(), Value::String(c.to_string())))
        .collect();
    Value::Object(map)
}

pub fn matrix<R: Ring>(m: &SquareMatrix<R>, entry: impl Fn(&R) -> Value) -> Value {
    Value::Array(
        m.rows()
            .map(|row| Value::Array(row.iter().map(&entry).collect()))
            .collect(),
    )
}

pub fn rational_matrix(m: &SquareMatrix<BigRational>) -> Value {
    matrix(m, rational)
}

pub fn vector(v: &[BigRational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}
