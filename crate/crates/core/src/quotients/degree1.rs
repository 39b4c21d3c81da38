//! The quotient `δ_1(I_2) / δ_1([M_2, I_2])` and the order of `δ_1(ψ0)` in it.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::lattice::{rational_quotient_divisors, RationalLattice};
use super::CyclicOrder;
use crate::arith::rational::lcm_of_denominators;
use crate::arith::{QVector, RationalSpan};
use crate::error::{Error, Result};
use crate::expansion::{delta_k, QMatrix};
use crate::jones::minus_one_matrix;
use crate::words::{Generator, GroupWord};

/// Conjugation by the `t = -1` matrices of the twelve signed generators.
pub(crate) struct Degree0Action {
    pairs: Vec<(QMatrix, QMatrix)>,
}

impl Degree0Action {
    pub(crate) fn new() -> Self {
        let pairs = Generator::all()
            .map(|g| {
                let p = minus_one_matrix(&GroupWord::generator(g)).to_rational();
                let p_inv = minus_one_matrix(&GroupWord::generator(g.inverted())).to_rational();
                (p, p_inv)
            })
            .collect();
        Degree0Action { pairs }
    }

    pub(crate) fn images<'a>(&'a self, v: &'a [BigRational]) -> impl Iterator<Item = QVector> + 'a {
        let m = to_matrix(v);
        self.pairs
            .iter()
            .map(move |(p, p_inv)| (&(p * &m) * p_inv).entries().to_vec())
    }
}

pub(crate) fn to_matrix(v: &[BigRational]) -> QMatrix {
    crate::arith::SquareMatrix::from_fn(5, |i, j| v[5 * i + j].clone())
}

#[derive(Clone, Debug)]
pub struct OrbitLattices {
    /// `δ_1` of the conjugates of `ψ0`.
    pub l: RationalLattice,
    /// Differences `g·v - v` for `v` in `L`.
    pub l_prime: RationalLattice,
    /// Last word length of the orbit search.
    pub depth: usize,
    pub orbit_size: usize,
    /// Both lattices are mapped into themselves by every generator.
    pub stable: bool,
}

impl OrbitLattices {
    pub fn elementary_divisors(&self) -> Result<Vec<BigInt>> {
        rational_quotient_divisors(&self.l, &self.l_prime)
    }
}

fn saturate(lattice: &mut RationalLattice, action: &Degree0Action, cap: usize) -> Result<()> {
    for _ in 0..cap {
        let mut changed = false;
        for b in lattice.rational_basis() {
            for img in action.images(&b) {
                changed |= lattice.insert(&img);
            }
        }
        if !changed {
            return Ok(());
        }
    }
    Err(Error::IterationCap {
        cap,
        diagnostics: format!("lattice rank {} still growing", lattice.rank()),
    })
}

fn is_stable(lattice: &RationalLattice, action: &Degree0Action) -> bool {
    lattice
        .rational_basis()
        .iter()
        .all(|b| action.images(b).all(|img| lattice.contains(&img)))
}

const SATURATION_CAP: usize = 64;

/// Builds `L` by breadth-first search over conjugating words of length at
/// most `max_depth`, stopping once `L` is unchanged for two consecutive word
/// lengths, then saturates `L` and `L'` under the generators.
///
/// `scale` is the initial common denominator of the integer coordinates; the
/// quotient does not depend on it.
pub fn orbit_lattice_degree1(max_depth: usize, scale: &BigInt) -> Result<OrbitLattices> {
    if max_depth == 0 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    let action = Degree0Action::new();
    let start = delta_k(&GroupWord::psi0(), 1)?.matrix.entries().to_vec();
    let mut l = RationalLattice::with_scale(25, scale.clone());
    l.insert(&start);
    let mut seen: HashSet<QVector> = HashSet::from([start.clone()]);
    let mut frontier = vec![start];
    let mut quiet_levels = 0;
    let mut depth = 0;
    while depth < max_depth && quiet_levels < 2 && !frontier.is_empty() {
        depth += 1;
        let mut grew = false;
        let mut next = Vec::new();
        for v in &frontier {
            for img in action.images(v) {
                if seen.insert(img.clone()) {
                    grew |= l.insert(&img);
                    next.push(img);
                }
            }
        }
        quiet_levels = if grew { 0 } else { quiet_levels + 1 };
        frontier = next;
    }
    saturate(&mut l, &action, SATURATION_CAP)?;

    let mut l_prime = RationalLattice::with_scale(25, scale.clone());
    for b in l.rational_basis() {
        for img in action.images(&b) {
            let diff: QVector = img.iter().zip(&b).map(|(x, y)| x - y).collect();
            l_prime.insert(&diff);
        }
    }
    saturate(&mut l_prime, &action, SATURATION_CAP)?;
    let stable = is_stable(&l, &action) && is_stable(&l_prime, &action);
    Ok(OrbitLattices {
        l,
        l_prime,
        depth,
        orbit_size: seen.len(),
        stable,
    })
}

/// Smallest `n` in `1..=cap` with `n v ∈ M`, or `Infinite` when no multiple of
/// `v` lies in `M ⊗ Q`.
pub fn cyclic_order_in(v: &[BigRational], m: &RationalLattice, cap: u64) -> CyclicOrder {
    let span = RationalSpan::from_vectors(v.len(), &m.rational_basis());
    if !span.contains(v) {
        return CyclicOrder::Infinite;
    }
    for n in 1..=cap {
        let nv: QVector = v
            .iter()
            .map(|x| x * BigRational::from_integer(n.into()))
            .collect();
        if m.contains(&nv) {
            return CyclicOrder::Finite(n);
        }
    }
    CyclicOrder::ExceedsCap(cap)
}

/// Order of `v` modulo `M` read off from its rational coordinates in a
/// lattice basis of `M`: the lcm of their denominators.
pub fn order_by_denominators(v: &[BigRational], m: &RationalLattice) -> Option<BigInt> {
    let basis = m.rational_basis();
    if basis.is_empty() {
        return v.iter().all(Zero::is_zero).then(BigInt::one);
    }
    // Solve sum c_i b_i = v.
    let k = basis.len();
    let rows: Vec<QVector> = (0..v.len())
        .map(|c| {
            let mut r: QVector = basis.iter().map(|b| b[c].clone()).collect();
            r.push(-v[c].clone());
            r
        })
        .collect();
    let sol = crate::arith::nullspace(&rows, k + 1)
        .into_iter()
        .find(|s| !s[k].is_zero())?;
    let norm = sol[k].clone();
    let coords: Vec<BigRational> = sol[..k].iter().map(|c| c / &norm).collect();
    Some(lcm_of_denominators(&coords))
}

#[derive(Clone, Debug)]
pub struct Degree1Quotient {
    pub lattices: OrbitLattices,
    pub order: CyclicOrder,
}

pub fn cyclic_order_degree1(max_depth: usize, cap: u64) -> Result<Degree1Quotient> {
    let lattices = orbit_lattice_degree1(max_depth, &BigInt::one())?;
    let v = delta_k(&GroupWord::psi0(), 1)?.matrix.entries().to_vec();
    let order = cyclic_order_in(&v, &lattices.l_prime, cap);
    Ok(Degree1Quotient { lattices, order })
}
