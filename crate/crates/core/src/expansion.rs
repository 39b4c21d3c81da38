//! The expansion `φ` of the Jones representation at `t = -e^h`, its
//! truncations, and the graded invariants `δ_k` of Torelli elements.

use num_rational::BigRational;
use num_traits::One;

use crate::arith::{series_from_laurent_at_minus_exp_h, SquareMatrix, TruncSeries};
use crate::error::{Error, Result};
use crate::jones::{minus_one_matrix, rho_evaluate, rho_generator};
use crate::words::{is_torelli, GroupWord};

pub type PhiMatrix = SquareMatrix<TruncSeries>;
pub type QMatrix = SquareMatrix<BigRational>;

pub const DEFAULT_ORDER: usize = 3;

pub fn series_matrix(m: &crate::jones::JonesMatrix, order: usize) -> PhiMatrix {
    m.map(|p| series_from_laurent_at_minus_exp_h(p, order))
}

/// `φ(w) mod h^(K+1)`, as the product of the expanded generator matrices.
pub fn phi_truncated(w: &GroupWord, order: usize) -> PhiMatrix {
    let id = SquareMatrix::identity(5, TruncSeries::one(order));
    w.letters()
        .iter()
        .fold(id, |acc, &g| &acc * &series_matrix(rho_generator(g), order))
}

/// `φ(w) mod h^(K+1)` obtained by expanding `ρ(w)` entrywise. Agrees with
/// [`phi_truncated`] because the substitution is a ring homomorphism.
pub fn phi_from_rho(w: &GroupWord, order: usize) -> PhiMatrix {
    series_matrix(&rho_evaluate(w), order)
}

/// The rational matrix of `h^i` coefficients.
pub fn coefficient(phi: &PhiMatrix, i: usize) -> QMatrix {
    phi.map(|s| s.coeff(i).clone())
}

/// Coefficient matrices `[M_0, ..., M_K]` of `φ(w)`.
pub fn phi_coefficients(w: &GroupWord, order: usize) -> Vec<QMatrix> {
    let phi = phi_truncated(w, order);
    (0..=order).map(|i| coefficient(&phi, i)).collect()
}

/// The class of `δ(w) = φ(w) - 1` in degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaClass {
    pub degree: usize,
    pub matrix: QMatrix,
}

impl DeltaClass {
    pub fn zero(degree: usize) -> Self {
        DeltaClass {
            degree,
            matrix: SquareMatrix::identity(5, BigRational::one()).zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn add(&self, other: &DeltaClass) -> Result<DeltaClass> {
        if self.degree != other.degree {
            return Err(Error::InvalidArgument(format!(
                "cannot add classes of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        Ok(DeltaClass {
            degree: self.degree,
            matrix: &self.matrix + &other.matrix,
        })
    }

    /// `[x, y] = xy - yx`, of degree `deg x + deg y`.
    pub fn bracket(&self, other: &DeltaClass) -> DeltaClass {
        DeltaClass {
            degree: self.degree + other.degree,
            matrix: self.matrix.commutator(&other.matrix),
        }
    }
}

fn require_torelli(w: &GroupWord) -> Result<()> {
    if is_torelli(w) {
        Ok(())
    } else {
        Err(Error::NotTorelli)
    }
}

/// `δ_k(w)`. Errors if `w` is not Torelli or if `φ(w) - 1` has a nonzero
/// coefficient below `h^k`.
pub fn delta_k(w: &GroupWord, k: usize) -> Result<DeltaClass> {
    if k == 0 {
        return Err(Error::InvalidDegree { min: 1, got: k });
    }
    require_torelli(w)?;
    let phi = phi_truncated(w, k);
    if let Some(d) = first_nontrivial_degree(&phi) {
        if d < k {
            return Err(Error::BelowDegree {
                degree: d,
                requested: k,
            });
        }
    }
    Ok(DeltaClass {
        degree: k,
        matrix: coefficient(&phi, k),
    })
}

/// Smallest `i` with `φ(w) - 1` nonzero in degree `i`.
fn first_nontrivial_degree(phi: &PhiMatrix) -> Option<usize> {
    let order = phi.get(0, 0).order();
    (0..=order).find(|&i| {
        let c = coefficient(phi, i);
        if i == 0 {
            !c.is_identity()
        } else {
            !c.is_zero()
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiltrationDegree {
    /// `w ∈ F_k \ F_{k+1}`.
    Exact(usize),
    /// `φ(w) ≡ 1 mod h^(K+1)`.
    ExceedsBound(usize),
}

pub fn filtration_degree(w: &GroupWord, max: usize) -> Result<FiltrationDegree> {
    require_torelli(w)?;
    let phi = phi_truncated(w, max);
    Ok(match first_nontrivial_degree(&phi) {
        Some(k) => FiltrationDegree::Exact(k),
        None => FiltrationDegree::ExceedsBound(max),
    })
}

/// `P(g) d P(g)^-1` with `P` the `t = -1` specialization.
pub fn conjugation_action(g: &GroupWord, d: &DeltaClass) -> DeltaClass {
    let p = minus_one_matrix(g).to_rational();
    let p_inv = minus_one_matrix(&g.inverse()).to_rational();
    DeltaClass {
        degree: d.degree,
        matrix: &(&p * &d.matrix) * &p_inv,
    }
}

/// `φ^(0)(w)`, the `t = -1` specialization.
pub fn degree_zero(w: &GroupWord) -> QMatrix {
    minus_one_matrix(w).to_rational()
}

/// `F diag(6, 6, -24, 6, 6) F^-1`.
pub fn expected_delta1_psi0() -> QMatrix {
    let f = crate::jones::f_matrix().to_rational();
    let f_inv = f.inverse().expect("F is unimodular");
    let d = SquareMatrix::diagonal(
        [6, 6, -24, 6, 6]
            .map(|x| BigRational::from_integer(x.into()))
            .to_vec(),
    );
    &(&f * &d) * &f_inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn w(s: &str) -> GroupWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn empty_word_is_identity() {
        for k in 0..4 {
            assert!(phi_truncated(&GroupWord::identity(), k).is_identity());
        }
    }

    #[test]
    fn psi0_degree_zero_is_identity() {
        assert!(phi_truncated(&GroupWord::psi0(), 0).is_identity());
    }

    #[test]
    fn psi0_degree_one() {
        let phi = phi_truncated(&GroupWord::psi0(), 1);
        assert!(coefficient(&phi, 0).is_identity());
        assert_eq!(coefficient(&phi, 1), expected_delta1_psi0());
        assert_eq!(
            delta_k(&GroupWord::psi0(), 1).unwrap().matrix,
            expected_delta1_psi0()
        );
    }

    #[test]
    fn both_routes_agree() {
        for s in ["psi0", "z1 xi' z3", "xi^2 z5' z2", "[psi0, xi psi0 xi']"] {
            assert_eq!(phi_truncated(&w(s), 3), phi_from_rho(&w(s), 3), "{s}");
        }
    }

    #[test]
    fn empty_delta_is_zero() {
        assert!(delta_k(&GroupWord::identity(), 1).unwrap().is_zero());
    }

    #[test]
    fn delta_rejects_non_torelli() {
        assert!(matches!(delta_k(&w("z1"), 1), Err(Error::NotTorelli)));
        assert!(matches!(
            filtration_degree(&w("xi"), 3),
            Err(Error::NotTorelli)
        ));
    }

    #[test]
    fn delta_checks_lower_degrees() {
        assert!(matches!(
            delta_k(&GroupWord::psi0(), 2),
            Err(Error::BelowDegree {
                degree: 1,
                requested: 2
            })
        ));
        assert!(matches!(
            delta_k(&GroupWord::psi0(), 0),
            Err(Error::InvalidDegree { .. })
        ));
    }

    #[test]
    fn commutator_bracket_formula() {
        let x = GroupWord::psi0();
        let y = x.conjugated_by(&w("xi"));
        let c = GroupWord::commutator(&x, &y);
        let lhs = delta_k(&c, 2).unwrap();
        let rhs = delta_k(&x, 1).unwrap().bracket(&delta_k(&y, 1).unwrap());
        assert_eq!(lhs, rhs);
        assert!(!lhs.is_zero());
        assert_eq!(
            filtration_degree(&c, 4).unwrap(),
            FiltrationDegree::Exact(2)
        );
    }

    #[test]
    fn filtration_degrees() {
        assert_eq!(
            filtration_degree(&GroupWord::psi0(), 3).unwrap(),
            FiltrationDegree::Exact(1)
        );
        let trivial = GroupWord::new(
            GroupWord::psi0()
                .letters()
                .iter()
                .chain(GroupWord::psi0().inverse().letters())
                .copied(),
        );
        assert_eq!(
            filtration_degree(&trivial, 5).unwrap(),
            FiltrationDegree::ExceedsBound(5)
        );
    }

    #[test]
    fn conjugation_matches_delta_of_conjugate() {
        let d = delta_k(&GroupWord::psi0(), 1).unwrap();
        assert_eq!(conjugation_action(&GroupWord::identity(), &d), d);
        for s in ["z1", "xi", "z3' xi z2", "xi' z5 z5"] {
            let g = w(s);
            let lhs = conjugation_action(&g, &d);
            let rhs = delta_k(&GroupWord::psi0().conjugated_by(&g), 1).unwrap();
            assert_eq!(lhs, rhs, "{s}");
        }
    }

    #[test]
    fn xi_orbit_has_period_dividing_six() {
        let d = delta_k(&GroupWord::psi0(), 1).unwrap();
        let x = w("xi");
        let back = (0..6).fold(d.clone(), |acc, _| conjugation_action(&x, &acc));
        assert_eq!(back, d);
    }
}
