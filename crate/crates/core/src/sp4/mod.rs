//! `sp(4)` acting on `Γ_{0,1} = Λ²H/ω ⊗ Q` and on `End(Γ_{0,1})`.
//!
//! `H` has basis `(x1, x2, y1, y2)` and form `J = [[0, I], [-I, 0]]`. The
//! Cartan subalgebra is `diag(a, b, -a, -b)`, so a weight `(a, b)` means
//! `a L1 + b L2`. `Γ_{0,1}` has basis
//! `t1 = x1∧x2, t2 = y1∧y2, t3 = x1∧y1, t4 = x1∧y2, t5 = x2∧y1`, and
//! `x2∧y2 = -t3` modulo `ω = x1∧y1 + x2∧y2`.
//! `End(Γ_{0,1})` has basis `e_{i,j} = t_i ⊗ t_j^*`, stored at index `5(i-1) + (j-1)`.

mod module;
mod orbit;
mod tables;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{QVector, Ring, SquareMatrix};
use crate::words::symplectic_form;

pub use module::{
    bracket_module, highest_weight_submodule, highest_weight_vectors, identify_module,
    weight_table, Constituent, Decomposition, Gamma, Submodule, WeightTable,
};
pub use orbit::{
    expected_constituent, graded_identification, identified_class, lower_central_series,
    orbit_span, LowerCentralSeries, OrbitSpan,
};
pub use tables::{table1, table2, TABLE_WEIGHT_ORDER};

/// `a L1 + b L2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

impl Weight {
    pub const fn new(a: i64, b: i64) -> Self {
        Weight { a, b }
    }

    pub const ZERO: Weight = Weight::new(0, 0);
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, o: Weight) -> Weight {
        Weight::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Weight {
    type Output = Weight;

    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.a - o.a, self.b - o.b)
    }
}

/// Lexicographic on `(a, b)`.
impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.a, self.b).cmp(&(other.a, other.b))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn scaled(k: i64, inner: &str, compound: bool) -> String {
    let wrap = |s: &str| {
        if compound {
            format!("({s})")
        } else {
            s.to_string()
        }
    };
    match k {
        1 => inner.to_string(),
        -1 => format!("-{}", wrap(inner)),
        _ => format!("{k}{}", wrap(inner)),
    }
}

/// Renders in table style: `2(L1+L2)`, `-L1+L2`, `-2L2`, `0`.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.a, self.b);
        let s = if a == 0 && b == 0 {
            "0".to_string()
        } else if a == b {
            scaled(a, "L1+L2", true)
        } else if a == -b && a > 0 {
            scaled(a, "L1-L2", true)
        } else if a == -b {
            match -a {
                1 => "-L1+L2".to_string(),
                k => format!("{k}(-L1+L2)"),
            }
        } else if b == 0 {
            scaled(a, "L1", false)
        } else if a == 0 {
            scaled(b, "L2", false)
        } else {
            let second = scaled(b, "L2", false);
            let sep = if second.starts_with('-') { "" } else { "+" };
            format!("{}{sep}{second}", scaled(a, "L1", false))
        };
        f.write_str(&s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    L1MinusL2,
    TwoL1,
    TwoL2,
    L1PlusL2,
}

impl Root {
    pub const POSITIVE: [Root; 4] = [Root::L1MinusL2, Root::TwoL1, Root::TwoL2, Root::L1PlusL2];

    pub fn weight(self) -> Weight {
        match self {
            Root::L1MinusL2 => Weight::new(1, -1),
            Root::TwoL1 => Weight::new(2, 0),
            Root::TwoL2 => Weight::new(0, 2),
            Root::L1PlusL2 => Weight::new(1, 1),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.weight())
    }
}

/// A `4 x 4` rational matrix `A` with `A^T J + J A = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement(pub SquareMatrix<BigRational>);

impl LieElement {
    pub fn from_entries(entries: &[((usize, usize), i64)]) -> Self {
        let mut m = SquareMatrix::identity(4, BigRational::one()).zero();
        for &((i, j), v) in entries {
            m.set(i, j, BigRational::from_integer(v.into()));
        }
        LieElement(m)
    }

    pub fn is_symplectic(&self) -> bool {
        let j = symplectic_form().to_rational();
        (&(&self.0.transpose() * &j) + &(&j * &self.0)).is_zero()
    }

    pub fn bracket(&self, other: &LieElement) -> LieElement {
        LieElement(self.0.commutator(&other.0))
    }

    pub fn is_cartan(&self) -> bool {
        let m = &self.0;
        (0..4).all(|i| (0..4).all(|j| i == j || m.get(i, j).is_zero()))
            && m.get(0, 0) == &-m.get(2, 2).clone()
            && m.get(1, 1) == &-m.get(3, 3).clone()
    }
}

#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    pub h1: LieElement,
    pub h2: LieElement,
    /// Raising operators, indexed like [`Root::POSITIVE`].
    pub x: [LieElement; 4],
    /// Lowering operators, indexed like [`Root::POSITIVE`].
    pub y: [LieElement; 4],
}

impl ChevalleyBasis {
    pub fn all(&self) -> Vec<&LieElement> {
        let mut v = vec![&self.h1, &self.h2];
        v.extend(self.x.iter());
        v.extend(self.y.iter());
        v
    }

    pub fn raising(&self, r: Root) -> &LieElement {
        &self.x[Root::POSITIVE.iter().position(|&s| s == r).unwrap()]
    }

    pub fn lowering(&self, r: Root) -> &LieElement {
        &self.y[Root::POSITIVE.iter().position(|&s| s == r).unwrap()]
    }
}

/// Blocks `[[P, Q], [R, -P^T]]` with elementary `P`, `Q`, `R`.
pub fn chevalley_basis() -> ChevalleyBasis {
    let e = LieElement::from_entries;
    ChevalleyBasis {
        h1: e(&[((0, 0), 1), ((2, 2), -1)]),
        h2: e(&[((1, 1), 1), ((3, 3), -1)]),
        x: [
            e(&[((0, 1), 1), ((3, 2), -1)]),
            e(&[((0, 2), 1)]),
            e(&[((1, 3), 1)]),
            e(&[((0, 3), 1), ((1, 2), 1)]),
        ],
        y: [
            e(&[((1, 0), 1), ((2, 3), -1)]),
            e(&[((2, 0), 1)]),
            e(&[((3, 1), 1)]),
            e(&[((3, 0), 1), ((2, 1), 1)]),
        ],
    }
}

/// Index pairs `(i, j)`, `i < j`, of `e_i ∧ e_j` for `t1..t5`.
const WEDGE_PAIRS: [(usize, usize); 5] = [(0, 1), (2, 3), (0, 2), (0, 3), (1, 2)];

/// Weights of `t1..t5`.
pub const T_WEIGHTS: [Weight; 5] = [
    Weight::new(1, 1),
    Weight::new(-1, -1),
    Weight::new(0, 0),
    Weight::new(1, -1),
    Weight::new(-1, 1),
];

/// Coordinates in `t1..t5` of the bivector with Plücker coordinates `c[i][j]`.
fn reduce_bivector<R: Ring>(c: impl Fn(usize, usize) -> R) -> [R; 5] {
    [
        c(0, 1),
        c(2, 3),
        c(0, 2).sub_ref(&c(1, 3)),
        c(0, 3),
        c(1, 2),
    ]
}

fn column<R: Ring>(m: &SquareMatrix<R>, j: usize) -> Vec<R> {
    (0..m.dim()).map(|i| m.get(i, j).clone()).collect()
}

fn plucker<R: Ring>(u: &[R], v: &[R], a: usize, b: usize) -> R {
    u[a].mul_ref(&v[b]).sub_ref(&u[b].mul_ref(&v[a]))
}

/// Matrix of `u∧v -> Mu∧Mv` on `Λ²H/ω` for symplectic `M`; column `j` is the image of `t_j`.
pub fn wedge_action<R: Ring>(m: &SquareMatrix<R>) -> SquareMatrix<R> {
    let zero = m.get(0, 0).zero_like();
    let mut out = SquareMatrix::from_fn(5, |_, _| zero.clone());
    for (j, &(p, q)) in WEDGE_PAIRS.iter().enumerate() {
        let (u, v) = (column(m, p), column(m, q));
        for (i, x) in reduce_bivector(|a, b| plucker(&u, &v, a, b))
            .into_iter()
            .enumerate()
        {
            out.set(i, j, x);
        }
    }
    out
}

/// Matrix of the derivation `u∧v -> Au∧v + u∧Av` on `Γ_{0,1}`.
pub fn derivation_matrix(a: &LieElement) -> SquareMatrix<BigRational> {
    let a = &a.0;
    let mut out = SquareMatrix::identity(5, BigRational::one()).zero();
    for (j, &(p, q)) in WEDGE_PAIRS.iter().enumerate() {
        let au = column(a, p);
        let av = column(a, q);
        let basis = |k: usize| -> Vec<BigRational> {
            (0..4)
                .map(|i| {
                    if i == k {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        };
        let (u, v) = (basis(p), basis(q));
        let coords = reduce_bivector(|x, y| &plucker(&au, &v, x, y) + &plucker(&u, &av, x, y));
        for (i, c) in coords.into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    out
}

/// Coordinates in `t1..t5` of the class of `ω` itself, which vanishes.
pub fn omega_class() -> [BigRational; 5] {
    let mut c = [[0i64; 4]; 4];
    c[0][2] = 1;
    c[1][3] = 1;
    reduce_bivector(|a, b| BigRational::from_integer(c[a][b].into()))
}

pub fn act_on_gamma01(a: &LieElement, v: &[BigRational]) -> QVector {
    mat_vec(&derivation_matrix(a), v)
}

pub fn mat_vec(m: &SquareMatrix<BigRational>, v: &[BigRational]) -> QVector {
    m.rows()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub const END_DIM: usize = 25;

pub fn end_index(i: usize, j: usize) -> usize {
    5 * i + j
}

/// The basis vector `e_{i,j}` with 1-based indices.
pub fn e(i: usize, j: usize) -> QVector {
    let mut v = vec![BigRational::zero(); END_DIM];
    v[end_index(i - 1, j - 1)] = BigRational::one();
    v
}

/// Integer combination of `e_{i,j}` (1-based indices).
pub fn end_vector(terms: &[(i64, usize, usize)]) -> QVector {
    let mut v = vec![BigRational::zero(); END_DIM];
    for &(c, i, j) in terms {
        v[end_index(i - 1, j - 1)] += BigRational::from_integer(c.into());
    }
    v
}

pub fn end_to_matrix(v: &[BigRational]) -> SquareMatrix<BigRational> {
    SquareMatrix::from_fn(5, |i, j| v[end_index(i, j)].clone())
}

pub fn matrix_to_end(m: &SquareMatrix<BigRational>) -> QVector {
    m.entries().to_vec()
}

/// Weight of `e_{i,j}` (0-based), the weight of `t_i` minus that of `t_j`.
pub fn end_weight(index: usize) -> Weight {
    T_WEIGHTS[index / 5] - T_WEIGHTS[index % 5]
}

/// `A·e = ρ(A) e - e ρ(A)`.
pub fn act_on_end(a: &LieElement, v: &[BigRational]) -> QVector {
    let r = derivation_matrix(a);
    matrix_to_end(&r.commutator(&end_to_matrix(v)))
}

/// `g·e = W e W^-1`, with `W` the action of symplectic `g` on `Λ²H/ω`.
pub fn group_act_on_end(g: &SquareMatrix<BigInt>, v: &[BigRational]) -> QVector {
    let w = wedge_action(g).to_rational();
    let w_inv = w.inverse().expect("symplectic action is invertible");
    matrix_to_end(&(&(&w * &end_to_matrix(v)) * &w_inv))
}

/// The weight of `v` if it is a simultaneous Cartan eigenvector.
pub fn weight_of(v: &[BigRational]) -> Option<Weight> {
    let mut found: Option<Weight> = None;
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let w = end_weight(i);
        match found {
            None => found = Some(w),
            Some(f) if f != w => return None,
            _ => {}
        }
    }
    found
}

/// The identity endomorphism `Σ e_{i,i}`.
pub fn identity_end() -> QVector {
    end_vector(&[(1, 1, 1), (1, 2, 2), (1, 3, 3), (1, 4, 4), (1, 5, 5)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::q;

    #[test]
    fn cartan_commutes() {
        let c = chevalley_basis();
        assert!(c.h1.bracket(&c.h2).0.is_zero());
    }

    #[test]
    fn basis_is_symplectic() {
        for a in chevalley_basis().all() {
            assert!(a.is_symplectic());
        }
    }

    #[test]
    fn raising_lowering_bracket_in_cartan() {
        let c = chevalley_basis();
        for (x, y) in c.x.iter().zip(&c.y) {
            let h = x.bracket(y);
            assert!(h.is_cartan());
            assert!(!h.0.is_zero());
        }
    }

    #[test]
    fn root_vectors_have_their_weights() {
        let c = chevalley_basis();
        for (k, r) in Root::POSITIVE.iter().enumerate() {
            let w = r.weight();
            for (h, eig) in [(&c.h1, w.a), (&c.h2, w.b)] {
                assert_eq!(h.bracket(&c.x[k]).0, c.x[k].0.scale(&q(eig)));
                assert_eq!(h.bracket(&c.y[k]).0, c.y[k].0.scale(&q(-eig)));
            }
        }
    }

    #[test]
    fn gamma01_weights() {
        let c = chevalley_basis();
        let t = |i| crate::arith::linalg::unit_vector(5, i);
        assert_eq!(act_on_gamma01(&c.h1, &t(0)), t(0));
        assert!(act_on_gamma01(&c.h2, &t(2)).iter().all(Zero::is_zero));
        for (i, w) in T_WEIGHTS.iter().enumerate() {
            assert_eq!(
                act_on_gamma01(&c.h1, &t(i)),
                t(i).iter().map(|x| x * q(w.a)).collect::<Vec<_>>()
            );
            assert_eq!(
                act_on_gamma01(&c.h2, &t(i)),
                t(i).iter().map(|x| x * q(w.b)).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn omega_is_zero_in_quotient() {
        assert!(omega_class().iter().all(Zero::is_zero));
    }

    #[test]
    fn derivation_is_a_lie_map() {
        let c = chevalley_basis();
        let all = c.all();
        for a in &all {
            for b in &all {
                let lhs = derivation_matrix(&a.bracket(b));
                let rhs = derivation_matrix(a).commutator(&derivation_matrix(b));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn end_weights_from_cartan() {
        let c = chevalley_basis();
        assert_eq!(weight_of(&e(1, 2)), Some(Weight::new(2, 2)));
        assert_eq!(weight_of(&e(4, 5)), Some(Weight::new(2, -2)));
        let v = e(1, 2);
        assert_eq!(
            act_on_end(&c.h1, &v),
            v.iter().map(|x| x * q(2)).collect::<Vec<_>>()
        );
        assert_eq!(
            act_on_end(&c.h2, &v),
            v.iter().map(|x| x * q(2)).collect::<Vec<_>>()
        );
        for i in 1..=5 {
            assert!(act_on_end(&c.h1, &e(i, i)).iter().all(Zero::is_zero));
            assert!(act_on_end(&c.h2, &e(i, i)).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn weight_display() {
        let cases = [
            ((2, 2), "2(L1+L2)"),
            ((1, 1), "L1+L2"),
            ((2, 0), "2L1"),
            ((0, 2), "2L2"),
            ((2, -2), "2(L1-L2)"),
            ((1, -1), "L1-L2"),
            ((0, 0), "0"),
            ((-1, 1), "-L1+L2"),
            ((-2, 2), "2(-L1+L2)"),
            ((0, -2), "-2L2"),
            ((-1, -1), "-(L1+L2)"),
            ((-2, -2), "-2(L1+L2)"),
            ((3, -1), "3L1-L2"),
        ];
        for ((a, b), s) in cases {
            assert_eq!(Weight::new(a, b).to_string(), s);
        }
    }
}
