//! Exact coefficient rings and the matrix linear algebra built on them.

pub mod laurent;
pub mod linalg;
pub mod matrix;
pub mod rational;
pub mod ring;
pub mod series;

pub use laurent::{laurent_mul, LaurentPoly};
pub use linalg::{nullspace, rational_rank, rref, QVector, RationalSpan};
pub use matrix::{mat_add, mat_inverse_unit_det, mat_mul, mat_scale, SquareMatrix};
pub use rational::{format_rational, parse_rational};
pub use ring::Ring;
pub use series::{series_from_laurent_at_minus_exp_h, TruncSeries};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
