//! Integer lattices in Hermite normal form and finitely generated quotients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::rational::lcm_of_denominators;
use crate::error::{Error, Result};

/// A sublattice of `Z^n`, stored as the rows of its Hermite normal form:
/// strictly increasing pivot columns, positive pivots, and entries above each
/// pivot reduced into `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    ambient: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl IntegerLattice {
    pub fn zero(ambient: usize) -> Self {
        IntegerLattice {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn standard(ambient: usize) -> Self {
        let rows: Vec<Vec<BigInt>> = (0..ambient)
            .map(|i| {
                (0..ambient)
                    .map(|j| BigInt::from(u8::from(i == j)))
                    .collect()
            })
            .collect();
        hnf(ambient, &rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Integer coordinates of `v` in the HNF basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient);
        let mut v = v.to_vec();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[..p].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let (q, r) = v[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                axpy(&mut v, &-&q, row);
            }
            coords.push(q);
        }
        v.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_lattice(&self, other: &IntegerLattice) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// Adds `v` to the generating set; returns whether the lattice grew.
    pub fn insert(&mut self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut v = v.to_vec();
        let mut changed = false;
        while let Some(p) = v.iter().position(|x| !x.is_zero()) {
            match self.pivots.binary_search(&p) {
                Err(pos) => {
                    if v[p].is_negative() {
                        v.iter_mut().for_each(|x| *x = -&*x);
                    }
                    self.rows.insert(pos, v);
                    self.pivots.insert(pos, p);
                    changed = true;
                    break;
                }
                Ok(k) => {
                    let a = self.rows[k][p].clone();
                    let b = v[p].clone();
                    let (q, r) = b.div_rem(&a);
                    if r.is_zero() {
                        axpy(&mut v, &-q, &self.rows[k]);
                        continue;
                    }
                    // x a + y b = g; the new pivot row is x row + y v and
                    // (a/g) v - (b/g) row has a zero at the pivot.
                    let e = a.extended_gcd(&b);
                    let row = &self.rows[k];
                    let new_row: Vec<BigInt> = row
                        .iter()
                        .zip(&v)
                        .map(|(r, s)| &e.x * r + &e.y * s)
                        .collect();
                    let (ag, bg) = (&a / &e.gcd, &b / &e.gcd);
                    v = v.iter().zip(row).map(|(s, r)| &ag * s - &bg * r).collect();
                    self.rows[k] = new_row;
                    changed = true;
                }
            }
        }
        if changed {
            self.reduce_above_pivots();
        }
        changed
    }

    fn reduce_above_pivots(&mut self) {
        for k in 0..self.rows.len() {
            let p = self.pivots[k];
            let (upper, lower) = self.rows.split_at_mut(k);
            let pivot_row = &lower[0];
            for row in upper.iter_mut() {
                let q = row[p].div_floor(&pivot_row[p]);
                if !q.is_zero() {
                    axpy(row, &-q, pivot_row);
                }
            }
        }
    }

    pub fn sum(&self, other: &IntegerLattice) -> IntegerLattice {
        let mut out = self.clone();
        for v in &other.rows {
            out.insert(v);
        }
        out
    }

    pub fn scaled(&self, c: &BigInt) -> IntegerLattice {
        let rows: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x * c).collect())
            .collect();
        hnf(self.ambient, &rows)
    }
}

fn axpy(v: &mut [BigInt], c: &BigInt, w: &[BigInt]) {
    for (x, y) in v.iter_mut().zip(w) {
        if !y.is_zero() {
            *x += c * y;
        }
    }
}

/// Hermite normal form of the row span of `rows`.
pub fn hnf(ambient: usize, rows: &[Vec<BigInt>]) -> IntegerLattice {
    let mut l = IntegerLattice::zero(ambient);
    for r in rows {
        l.insert(r);
    }
    l
}

/// Smith normal form diagonal of an integer matrix, as nonnegative entries
/// `d_1 | d_2 | ...`, one per row up to `min(rows, cols)`.
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>, cols: usize) -> Vec<BigInt> {
    let rows = m.len();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in m.iter().enumerate().skip(t) {
                for (j, x) in row.iter().enumerate().skip(t) {
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                diag.extend(std::iter::repeat_n(BigInt::zero(), rows.min(cols) - t));
                return diag;
            };
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
            let pivot = m[t][t].clone();
            let mut clean = true;
            for i in (t + 1)..rows {
                let q = m[i][t].div_floor(&pivot);
                if !q.is_zero() {
                    let pr = m[t].clone();
                    axpy(&mut m[i], &-&q, &pr);
                }
                clean &= m[i][t].is_zero();
            }
            for j in (t + 1)..cols {
                let q = m[t][j].div_floor(&pivot);
                if !q.is_zero() {
                    for row in m.iter_mut() {
                        let s = &q * &row[t];
                        row[j] -= s;
                    }
                }
                clean &= m[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // The pivot must divide the whole trailing block.
            let bad =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !m[i][j].is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    let ri = m[i].clone();
                    axpy(&mut m[t], &BigInt::one(), &ri);
                }
                None => {
                    diag.push(pivot.abs());
                    break;
                }
            }
        }
    }
    diag
}

/// Elementary divisors of `L/M`: one entry per basis vector of `L`, with `0`
/// for each free summand.
pub fn snf_quotient(l: &IntegerLattice, m: &IntegerLattice) -> Result<Vec<BigInt>> {
    if l.ambient_dim() != m.ambient_dim() {
        return Err(Error::DimensionMismatch {
            left: l.ambient_dim(),
            right: m.ambient_dim(),
        });
    }
    let coords: Vec<Vec<BigInt>> = m
        .basis()
        .iter()
        .map(|v| l.coordinates(v).ok_or(Error::NotSublattice))
        .collect::<Result<_>>()?;
    let n = l.rank();
    let mut d = smith_diagonal(coords, n);
    d.resize(n, BigInt::zero());
    d.sort_by(|a, b| match (a.is_zero(), b.is_zero()) {
        (true, false) => std::cmp::Ordering::Greater,
        (false, true) => std::cmp::Ordering::Less,
        _ => a.cmp(b),
    });
    Ok(d)
}

/// A lattice in `Q^n`, stored as an integer lattice of `scale`-multiples.
/// The scale is refined whenever a new vector needs a finer denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalLattice {
    scale: BigInt,
    lattice: IntegerLattice,
}

impl RationalLattice {
    pub fn zero(ambient: usize) -> Self {
        RationalLattice::with_scale(ambient, BigInt::one())
    }

    pub fn with_scale(ambient: usize, scale: BigInt) -> Self {
        assert!(scale.is_positive());
        RationalLattice {
            scale,
            lattice: IntegerLattice::zero(ambient),
        }
    }

    pub fn scale(&self) -> &BigInt {
        &self.scale
    }

    pub fn integer_lattice(&self) -> &IntegerLattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.lattice.ambient_dim()
    }

    fn scaled(&self, v: &[BigRational]) -> Vec<BigRational> {
        let s = BigRational::from_integer(self.scale.clone());
        v.iter().map(|x| x * &s).collect()
    }

    fn to_integers(v: &[BigRational]) -> Option<Vec<BigInt>> {
        v.iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        match Self::to_integers(&self.scaled(v)) {
            Some(iv) => self.lattice.contains(&iv),
            None => false,
        }
    }

    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        let scaled = self.scaled(v);
        let extra = lcm_of_denominators(&scaled);
        if !extra.is_one() {
            self.lattice = self.lattice.scaled(&extra);
            self.scale *= &extra;
        }
        let iv = Self::to_integers(&self.scaled(v)).expect("denominators cleared");
        self.lattice.insert(&iv)
    }

    /// Basis vectors in the original rational coordinates.
    pub fn rational_basis(&self) -> Vec<Vec<BigRational>> {
        self.lattice
            .basis()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| BigRational::new(x.clone(), self.scale.clone()))
                    .collect()
            })
            .collect()
    }
}

/// Elementary divisors of `L / M` for rational lattices `M ⊆ L`, computed on
/// a common denominator.
pub fn rational_quotient_divisors(l: &RationalLattice, m: &RationalLattice) -> Result<Vec<BigInt>> {
    let s = l.scale().lcm(m.scale());
    let rescale = |x: &RationalLattice| {
        let mut out = RationalLattice::with_scale(x.ambient_dim(), s.clone());
        for v in x.rational_basis() {
            out.insert(&v);
        }
        out
    };
    let (l, m) = (rescale(l), rescale(m));
    snf_quotient(l.integer_lattice(), m.integer_lattice())
}
