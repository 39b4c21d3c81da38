//! Dense square matrices over an exact [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::laurent::LaurentPoly;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Row-major `n x n` matrix. `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix<R> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> SquareMatrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty matrix".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: bad.len(),
            });
        }
        let entries: Vec<R> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| !e.compatible(&entries[0])) {
            return Err(Error::RingMismatch("entries from different rings".into()));
        }
        Ok(SquareMatrix { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        assert!(n > 0, "empty matrix");
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        SquareMatrix { n, entries }
    }

    /// Identity with the given one; zero is derived from it.
    pub fn identity(n: usize, one: R) -> Self {
        let zero = one.zero_like();
        SquareMatrix::from_fn(n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn diagonal(diag: Vec<R>) -> Self {
        let zero = diag[0].zero_like();
        SquareMatrix::from_fn(diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                zero.clone()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.entries[i * self.n + j] = value;
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.entries.chunks(self.n)
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> SquareMatrix<S> {
        SquareMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring>(&self, f: impl FnMut(&R) -> Result<S>) -> Result<SquareMatrix<S>> {
        Ok(SquareMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Ring::vanishes)
    }

    pub fn one(&self) -> Self {
        SquareMatrix::identity(self.n, self.entries[0].one_like())
    }

    pub fn zero(&self) -> Self {
        let z = self.entries[0].zero_like();
        SquareMatrix::from_fn(self.n, |_, _| z.clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == self.one()
    }

    fn check(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        if !self.entries[0].compatible(&rhs.entries[0]) {
            return Err(Error::RingMismatch("operands from different rings".into()));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(self.zip_with(rhs, R::add_ref))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(self.zip_with(rhs, R::sub_ref))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let n = self.n;
        let zero = self.entries[0].zero_like();
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = zero.clone();
                for k in 0..n {
                    let a = &self.entries[i * n + k];
                    if a.vanishes() {
                        continue;
                    }
                    let b = &rhs.entries[k * n + j];
                    if b.vanishes() {
                        continue;
                    }
                    acc = acc.add_ref(&a.mul_ref(b));
                }
                out.push(acc);
            }
        }
        Ok(SquareMatrix { n, entries: out })
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        SquareMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| c.mul_ref(x))
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg_ref)
    }

    pub fn transpose(&self) -> Self {
        SquareMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `AB - BA`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        &(self * rhs) - &(rhs * self)
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let n = self.n - 1;
        SquareMatrix::from_fn(n, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self.get(si, sj).clone()
        })
    }

    /// Division-free determinant by cofactor expansion; fine for the small
    /// dimensions used here.
    pub fn determinant(&self) -> R {
        if self.n == 1 {
            return self.entries[0].clone();
        }
        let mut acc = self.entries[0].zero_like();
        for j in 0..self.n {
            let a = self.get(0, j);
            if a.vanishes() {
                continue;
            }
            let term = a.mul_ref(&self.minor(0, j).determinant());
            acc = if j % 2 == 0 {
                acc.add_ref(&term)
            } else {
                acc.sub_ref(&term)
            };
        }
        acc
    }

    pub fn adjugate(&self) -> Self {
        if self.n == 1 {
            return self.one();
        }
        SquareMatrix::from_fn(self.n, |i, j| {
            let d = self.minor(j, i).determinant();
            if (i + j) % 2 == 0 {
                d
            } else {
                d.neg_ref()
            }
        })
    }
}

pub fn mat_add<R: Ring>(a: &SquareMatrix<R>, b: &SquareMatrix<R>) -> Result<SquareMatrix<R>> {
    a.try_add(b)
}

pub fn mat_mul<R: Ring>(a: &SquareMatrix<R>, b: &SquareMatrix<R>) -> Result<SquareMatrix<R>> {
    a.try_mul(b)
}

pub fn mat_scale<R: Ring>(c: &R, a: &SquareMatrix<R>) -> SquareMatrix<R> {
    a.scale(c)
}

/// Exact inverse of a matrix over `Z[t, t^-1]` whose determinant is `±t^k`.
pub fn mat_inverse_unit_det(m: &SquareMatrix<LaurentPoly>) -> Result<SquareMatrix<LaurentPoly>> {
    let inv_det = m.determinant().unit_inverse()?;
    Ok(m.adjugate().scale(&inv_det))
}

impl SquareMatrix<BigRational> {
    /// Inverse over `Q`, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let rows: Vec<Vec<BigRational>> = self
            .rows()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.to_vec();
                row.extend(
                    (0..n).map(|j| BigRational::from_integer(BigInt::from(i32::from(i == j)))),
                );
                row
            })
            .collect();
        let (reduced, pivots) = super::linalg::rref(&rows);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(SquareMatrix {
            n,
            entries: reduced
                .into_iter()
                .flat_map(|r| r.into_iter().skip(n))
                .collect(),
        })
    }
}

impl SquareMatrix<BigInt> {
    pub fn to_rational(&self) -> SquareMatrix<BigRational> {
        self.map(|x| BigRational::from_integer(x.clone()))
    }
}

impl<R: Ring> Mul for &SquareMatrix<R> {
    type Output = SquareMatrix<R>;
    fn mul(self, rhs: &SquareMatrix<R>) -> SquareMatrix<R> {
        self.try_mul(rhs).expect("matrix product")
    }
}

impl<R: Ring> Add for &SquareMatrix<R> {
    type Output = SquareMatrix<R>;
    fn add(self, rhs: &SquareMatrix<R>) -> SquareMatrix<R> {
        self.try_add(rhs).expect("matrix sum")
    }
}

impl<R: Ring> Sub for &SquareMatrix<R> {
    type Output = SquareMatrix<R>;
    fn sub(self, rhs: &SquareMatrix<R>) -> SquareMatrix<R> {
        self.try_sub(rhs).expect("matrix difference")
    }
}

impl<R: Ring + fmt::Display> fmt::Display for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for row in cells.chunks(self.n) {
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.chunks(self.n)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::q;

    fn lp(c: i64, e: i64) -> LaurentPoly {
        LaurentPoly::monomial(c, e)
    }

    fn int_matrix(rows: &[&[i64]]) -> SquareMatrix<BigInt> {
        SquareMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let m = int_matrix(&[&[1, 2], &[3, 4]]);
        assert_eq!(&m.one() * &m, m);
    }

    #[test]
    fn diagonal_product() {
        let two = SquareMatrix::diagonal(vec![LaurentPoly::constant(2); 5]);
        let three = SquareMatrix::diagonal(vec![LaurentPoly::constant(3); 5]);
        assert_eq!(
            &two * &three,
            SquareMatrix::diagonal(vec![LaurentPoly::constant(6); 5])
        );
    }

    #[test]
    fn mismatch_errors() {
        let a = int_matrix(&[&[1, 2], &[3, 4]]);
        let b = int_matrix(&[&[1]]);
        assert!(matches!(
            a.try_mul(&b),
            Err(Error::DimensionMismatch { .. })
        ));
        let rows = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(3)],
        ];
        assert!(SquareMatrix::from_rows(rows).is_err());
    }

    #[test]
    fn series_ring_mismatch() {
        use crate::arith::series::TruncSeries;
        let a = SquareMatrix::identity(2, TruncSeries::one(2));
        let b = SquareMatrix::identity(2, TruncSeries::one(3));
        assert!(matches!(a.try_mul(&b), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn determinant_and_adjugate() {
        let m = int_matrix(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        let det = m.determinant();
        assert_eq!(det, BigInt::from(6));
        assert_eq!(&m * &m.adjugate(), m.one().scale(&det));
    }

    #[test]
    fn unit_det_inverse_of_diagonal() {
        let m = SquareMatrix::diagonal(vec![lp(1, 3), lp(-1, 2), lp(1, 0)]);
        let inv = mat_inverse_unit_det(&m).unwrap();
        assert_eq!(
            inv,
            SquareMatrix::diagonal(vec![lp(1, -3), lp(-1, -2), lp(1, 0)])
        );
    }

    #[test]
    fn non_unit_det_rejected() {
        let m = SquareMatrix::diagonal(vec![lp(2, 0), lp(1, 0)]);
        assert_eq!(mat_inverse_unit_det(&m), Err(Error::NotInvertible));
    }

    #[test]
    fn rational_inverse() {
        let m = int_matrix(&[&[2, 1], &[1, 1]]).to_rational();
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        let singular = int_matrix(&[&[1, 2], &[2, 4]]).to_rational();
        assert!(singular.inverse().is_none());
        assert_eq!(inv.get(0, 1), &q(-1));
    }
}
