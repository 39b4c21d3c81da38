//! The unipotent group `1 + hM + h²M mod h³` and subgroup membership in it.
//!
//! Writing `(a, b)` for `1 + ah + bh²`:
//!
//! ```text
//! (a, b)(c, d) = (a + c, b + d + ac)
//! (a, b)^-1    = (-a, -b + a²)
//! (a, b)^n     = (na, nb + n(n-1)/2 a²)
//! [(a, b), (c, d)] = (0, ac - ca)
//! ```
//!
//! The group has class 2: commutators have zero degree-1 part and are central.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::lattice::RationalLattice;
use crate::arith::SquareMatrix;
use crate::error::{Error, Result};
use crate::expansion::QMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NilpotentElement {
    pub a: QMatrix,
    pub b: QMatrix,
}

fn zero5() -> QMatrix {
    SquareMatrix::identity(5, BigRational::one()).zero()
}

fn q(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

impl NilpotentElement {
    pub fn identity() -> Self {
        NilpotentElement {
            a: zero5(),
            b: zero5(),
        }
    }

    pub fn new(a: QMatrix, b: QMatrix) -> Self {
        NilpotentElement { a, b }
    }

    /// From coefficient matrices `[1, a, b, ...]`; errors unless the constant term is the identity.
    pub fn from_coefficients(coeffs: &[QMatrix]) -> Result<Self> {
        if coeffs.len() < 3 {
            return Err(Error::InvalidDegree {
                min: 2,
                got: coeffs.len().saturating_sub(1),
            });
        }
        if !coeffs[0].is_identity() {
            return Err(Error::NotUnipotent(
                "degree-0 part is not the identity".into(),
            ));
        }
        Ok(NilpotentElement::new(coeffs[1].clone(), coeffs[2].clone()))
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn mul(&self, o: &NilpotentElement) -> NilpotentElement {
        NilpotentElement {
            a: &self.a + &o.a,
            b: &(&self.b + &o.b) + &(&self.a * &o.a),
        }
    }

    pub fn inverse(&self) -> NilpotentElement {
        NilpotentElement {
            a: self.a.neg(),
            b: &self.b.neg() + &(&self.a * &self.a),
        }
    }

    pub fn pow(&self, n: &BigInt) -> NilpotentElement {
        let tri = q(&(n * (n - BigInt::one()))) / q(&BigInt::from(2));
        NilpotentElement {
            a: self.a.scale(&q(n)),
            b: &self.b.scale(&q(n)) + &(&self.a * &self.a).scale(&tri),
        }
    }

    pub fn commutator(&self, o: &NilpotentElement) -> NilpotentElement {
        NilpotentElement {
            a: zero5(),
            b: self.a.commutator(&o.a),
        }
    }

    /// `m x m^-1` for `m = m0 + m1 h + m2 h²` with inverse `n0 + n1 h + n2 h²`.
    pub fn conjugate(&self, m: &[QMatrix; 3], n: &[QMatrix; 3]) -> NilpotentElement {
        // (m0 + m1 h)(a h + b h²)(n0 + n1 h) up to h².
        let a = &(&m[0] * &self.a) * &n[0];
        let b = &(&(&(&m[0] * &self.b) * &n[0]) + &(&(&m[1] * &self.a) * &n[0]))
            + &(&(&m[0] * &self.a) * &n[1]);
        NilpotentElement { a, b }
    }
}

pub fn flatten(m: &QMatrix) -> Vec<BigRational> {
    m.entries().to_vec()
}

/// Polycyclic data for a subgroup `S`: lifts whose degree-1 parts form an
/// echelon basis of the lattice `A` of degree-1 parts, and the lattice `B` of
/// central elements `(0, b)` in `S`. Every element of `S` is uniquely
/// `l_1^{n_1} ... l_r^{n_r} (0, b)` with `b ∈ B`.
#[derive(Clone, Debug)]
pub struct NilpotentSubgroupData {
    lifts: Vec<(usize, NilpotentElement)>,
    central: RationalLattice,
}

/// `x a + y b = g` over `Q`, reduced to the integer case on a common denominator.
fn rational_egcd(a: &BigRational, b: &BigRational) -> (BigInt, BigInt, BigRational) {
    let den = a.denom().lcm(b.denom());
    let ai = (a * q(&den)).to_integer();
    let bi = (b * q(&den)).to_integer();
    let e = ai.extended_gcd(&bi);
    (e.x, e.y, BigRational::new(e.gcd, den))
}

impl NilpotentSubgroupData {
    pub fn trivial() -> Self {
        NilpotentSubgroupData {
            lifts: Vec::new(),
            central: RationalLattice::zero(25),
        }
    }

    pub fn lifts(&self) -> impl Iterator<Item = &NilpotentElement> {
        self.lifts.iter().map(|(_, l)| l)
    }

    pub fn degree1_rank(&self) -> usize {
        self.lifts.len()
    }

    pub fn central(&self) -> &RationalLattice {
        &self.central
    }

    /// The lattice `A` of degree-1 parts.
    pub fn degree1_lattice(&self) -> RationalLattice {
        let mut a = RationalLattice::zero(25);
        for l in self.lifts() {
            a.insert(&flatten(&l.a));
        }
        a
    }

    pub fn central_rank(&self) -> usize {
        self.central.rank()
    }

    /// Multiplies `x` on the right by powers of lifts until no lift pivot
    /// can be cleared further. Returns the residue.
    fn reduce(&self, mut x: NilpotentElement) -> NilpotentElement {
        for (p, l) in &self.lifts {
            let c = x.a.entries()[*p].clone();
            if c.is_zero() {
                continue;
            }
            let ratio = &c / &l.a.entries()[*p];
            if !ratio.is_integer() {
                return x;
            }
            x = x.mul(&l.pow(&-ratio.to_integer()));
        }
        x
    }

    pub fn contains(&self, g: &NilpotentElement) -> bool {
        let r = self.reduce(g.clone());
        r.a.is_zero() && self.central.contains(&flatten(&r.b))
    }

    fn insert_central(&mut self, b: &QMatrix) -> bool {
        self.central.insert(&flatten(b))
    }

    /// Adds `x` to the generating set; returns whether the subgroup grew.
    pub fn insert(&mut self, mut x: NilpotentElement) -> bool {
        let mut changed = false;
        loop {
            let Some(p) = x.a.entries().iter().position(|c| !c.is_zero()) else {
                changed |= self.insert_central(&x.b);
                return changed;
            };
            let k = match self.lifts.binary_search_by_key(&p, |(q, _)| *q) {
                Err(pos) => {
                    let x = if x.a.entries()[p].is_negative() {
                        x.inverse()
                    } else {
                        x
                    };
                    self.lifts.insert(pos, (p, x));
                    self.close_commutators();
                    return true;
                }
                Ok(k) => k,
            };
            let l = self.lifts[k].1.clone();
            let (lp, xp) = (&l.a.entries()[p], &x.a.entries()[p]);
            let ratio = xp / lp;
            if ratio.is_integer() {
                x = x.mul(&l.pow(&-ratio.to_integer()));
                continue;
            }
            // Replace the lift by one with gcd pivot; the commutator keeps the
            // generated subgroup unchanged.
            let (u, v, g) = rational_egcd(lp, xp);
            let new_lift = l.pow(&u).mul(&x.pow(&v));
            let lg = (lp / &g).to_integer();
            let xg = (xp / &g).to_integer();
            let rest = x.pow(&lg).mul(&l.pow(&-xg));
            self.insert_central(&l.commutator(&x).b);
            self.lifts[k].1 = if new_lift.a.entries()[p].is_negative() {
                new_lift.inverse()
            } else {
                new_lift
            };
            self.close_commutators();
            changed = true;
            x = rest;
        }
    }

    fn close_commutators(&mut self) {
        for i in 0..self.lifts.len() {
            for j in (i + 1)..self.lifts.len() {
                let c = self.lifts[i].1.commutator(&self.lifts[j].1);
                self.central.insert(&flatten(&c.b));
            }
        }
    }

    /// Common denominator of the degree-1 parts of the lifts.
    pub fn degree1_denominator(&self) -> BigInt {
        crate::arith::rational::lcm_of_denominators(self.lifts().flat_map(|l| l.a.entries()))
    }
}

pub fn nilpotent_subgroup_closure(generators: &[NilpotentElement]) -> NilpotentSubgroupData {
    let mut data = NilpotentSubgroupData::trivial();
    for g in generators {
        data.insert(g.clone());
    }
    data
}

pub fn nilpotent_membership(g: &NilpotentElement, s: &NilpotentSubgroupData) -> bool {
    s.contains(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::q as qi;
    use crate::arith::TruncSeries;

    fn mat(f: impl Fn(usize, usize) -> i64) -> QMatrix {
        SquareMatrix::from_fn(5, |i, j| qi(f(i, j)))
    }

    fn sample(seed: i64) -> NilpotentElement {
        NilpotentElement::new(
            mat(|i, j| ((i * 3 + j * 7) as i64 * seed) % 5 - 2),
            mat(|i, j| ((i + 2 * j) as i64 + seed) % 3 - 1),
        )
    }

    fn as_series(x: &NilpotentElement) -> SquareMatrix<TruncSeries> {
        SquareMatrix::from_fn(5, |i, j| {
            let one = if i == j { qi(1) } else { qi(0) };
            TruncSeries::from_coeffs(vec![one, x.a.get(i, j).clone(), x.b.get(i, j).clone()], 2)
        })
    }

    fn from_series(m: &SquareMatrix<TruncSeries>) -> NilpotentElement {
        NilpotentElement::new(m.map(|s| s.coeff(1).clone()), m.map(|s| s.coeff(2).clone()))
    }

    #[test]
    fn law_matches_series_product() {
        let (x, y) = (sample(1), sample(2));
        assert_eq!(x.mul(&y), from_series(&(&as_series(&x) * &as_series(&y))));
        assert!(x.mul(&x.inverse()).is_identity());
        assert!(x.inverse().mul(&x).is_identity());
    }

    #[test]
    fn commutator_formula() {
        let (x, y) = (sample(3), sample(4));
        let direct = x.mul(&y).mul(&x.inverse()).mul(&y.inverse());
        assert_eq!(direct, x.commutator(&y));
    }

    #[test]
    fn power_formula() {
        let x = sample(5);
        let mut acc = NilpotentElement::identity();
        for n in 0..6 {
            assert_eq!(acc, x.pow(&BigInt::from(n)));
            acc = acc.mul(&x);
        }
        assert_eq!(x.pow(&BigInt::from(-3)), x.pow(&BigInt::from(3)).inverse());
    }

    #[test]
    fn cyclic_subgroup() {
        let x = sample(1);
        let s = nilpotent_subgroup_closure(std::slice::from_ref(&x));
        assert_eq!(s.degree1_rank(), 1);
        assert_eq!(s.central_rank(), 0);
        assert!(s.contains(&x.pow(&BigInt::from(7))));
        assert!(s.contains(&NilpotentElement::identity()));
        assert!(!s.contains(&sample(2)));
    }

    #[test]
    fn commuting_generators() {
        let x = NilpotentElement::new(mat(|i, j| i64::from(i == j)), mat(|_, _| 0));
        let y = NilpotentElement::new(
            mat(|i, j| 2 * i64::from(i == j)),
            mat(|i, j| i64::from(i == 0 && j == 1)),
        );
        let s = nilpotent_subgroup_closure(&[x.clone(), y.clone()]);
        assert_eq!(s.degree1_rank(), 1);
        assert_eq!(s.central_rank(), 1);
        assert!(s.contains(&x.mul(&y)));
        assert!(s.contains(&y));
    }

    #[test]
    fn gcd_replacement_keeps_generators() {
        let base = sample(1);
        let x = base
            .pow(&BigInt::from(4))
            .mul(&NilpotentElement::new(zero5(), mat(|i, _| i as i64)));
        let y = base.pow(&BigInt::from(6));
        let s = nilpotent_subgroup_closure(&[x.clone(), y.clone()]);
        assert!(s.contains(&x));
        assert!(s.contains(&y));
        assert!(s.contains(&x.mul(&y.inverse())));
        assert!(!s.contains(&base));
    }
}
