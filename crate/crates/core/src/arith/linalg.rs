//! Exact Gauss-Jordan elimination over `Q` and rational subspaces.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type QVector = Vec<BigRational>;

/// Reduced row echelon form of `rows`. Returns the nonzero reduced rows and
/// their pivot columns.
pub fn rref(rows: &[QVector]) -> (Vec<QVector>, Vec<usize>) {
    let mut m: Vec<QVector> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rational_rank(rows: &[QVector]) -> usize {
    rref(rows).1.len()
}

/// Basis of `{x : A x = 0}` for `A` given by `rows` with `ncols` columns.
pub fn nullspace(rows: &[QVector], ncols: usize) -> Vec<QVector> {
    let (reduced, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// A subspace of `Q^n`, stored as its reduced row echelon basis.
///
/// The RREF basis is canonical, so derived equality is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalSpan {
    ambient: usize,
    rows: Vec<QVector>,
    pivots: Vec<usize>,
}

impl RationalSpan {
    pub fn zero(ambient: usize) -> Self {
        RationalSpan {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| unit_vector(ambient, i))
            .collect::<Vec<_>>();
        RationalSpan::from_vectors(ambient, &rows)
    }

    pub fn from_vectors(ambient: usize, vectors: &[QVector]) -> Self {
        let (rows, pivots) = rref(vectors);
        RationalSpan {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[QVector] {
        &self.rows
    }

    fn reduce(&self, v: &[BigRational]) -> QVector {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }

    pub fn contains_span(&self, other: &RationalSpan) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &RationalSpan) -> RationalSpan {
        let mut out = self.clone();
        for v in &other.rows {
            out.insert(v);
        }
        out
    }

    pub fn intersection(&self, other: &RationalSpan) -> RationalSpan {
        // Solve sum a_i u_i = sum b_j w_j; the u-parts of solutions span the intersection.
        let k = self.dim();
        let l = other.dim();
        if k == 0 || l == 0 {
            return RationalSpan::zero(self.ambient);
        }
        let system: Vec<QVector> = (0..self.ambient)
            .map(|c| {
                self.rows
                    .iter()
                    .map(|u| u[c].clone())
                    .chain(other.rows.iter().map(|w| -w[c].clone()))
                    .collect()
            })
            .collect();
        let vectors: Vec<QVector> = nullspace(&system, k + l)
            .into_iter()
            .map(|sol| {
                let mut v = vec![BigRational::zero(); self.ambient];
                for (a, u) in sol[..k].iter().zip(&self.rows) {
                    if a.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(u) {
                        *x += a * y;
                    }
                }
                v
            })
            .collect();
        RationalSpan::from_vectors(self.ambient, &vectors)
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[BigRational]) -> Option<QVector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

pub fn unit_vector(n: usize, i: usize) -> QVector {
    let mut v = vec![BigRational::zero(); n];
    v[i] = BigRational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::q;

    fn qv(xs: &[i64]) -> QVector {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn identity_rank() {
        let rows: Vec<QVector> = (0..5).map(|i| unit_vector(5, i)).collect();
        assert_eq!(rational_rank(&rows), 5);
    }

    #[test]
    fn repeated_row_rank_deficit() {
        let rows = vec![qv(&[1, 2, 3]), qv(&[1, 2, 3]), qv(&[0, 1, 1])];
        assert_eq!(rational_rank(&rows), 2);
    }

    #[test]
    fn elementary_matrices_span_everything() {
        let rows: Vec<QVector> = (0..25).map(|i| unit_vector(25, i)).collect();
        assert_eq!(rational_rank(&rows), 25);
    }

    #[test]
    fn rref_shape() {
        let (r, p) = rref(&[qv(&[2, 4, 0]), qv(&[1, 2, 1])]);
        assert_eq!(p, vec![0, 2]);
        assert_eq!(r, vec![qv(&[1, 2, 0]), qv(&[0, 0, 1])]);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = vec![qv(&[1, 2, 3, 4]), qv(&[0, 1, 1, 1])];
        let ns = nullspace(&a, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                let dot: BigRational = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn span_equality_is_structural() {
        let a = RationalSpan::from_vectors(3, &[qv(&[1, 1, 0]), qv(&[0, 1, 1])]);
        let b = RationalSpan::from_vectors(3, &[qv(&[1, 2, 1]), qv(&[1, 0, -1])]);
        assert_eq!(a, b);
        let mut c = RationalSpan::zero(3);
        assert!(c.insert(&qv(&[1, 2, 1])));
        assert!(!c.insert(&qv(&[2, 4, 2])));
        assert!(c.insert(&qv(&[1, 0, -1])));
        assert_eq!(a, c);
    }

    #[test]
    fn intersection_dimension() {
        let a = RationalSpan::from_vectors(3, &[qv(&[1, 0, 0]), qv(&[0, 1, 0])]);
        let b = RationalSpan::from_vectors(3, &[qv(&[0, 1, 0]), qv(&[0, 0, 1])]);
        let i = a.intersection(&b);
        assert_eq!(i, RationalSpan::from_vectors(3, &[qv(&[0, 1, 0])]));
        assert_eq!(a.sum(&b).dim(), 3);
    }
}
