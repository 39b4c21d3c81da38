//! The 5-dimensional Jones representation of the genus-2 mapping class group
//! over `Z[t, t^-1]`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{mat_inverse_unit_det, LaurentPoly, SquareMatrix};
use crate::error::{Error, Result};
use crate::sp4::wedge_action;
use crate::words::{symplectic_action, Generator, GroupWord, Letter};

pub type JonesMatrix = SquareMatrix<LaurentPoly>;
pub type SpecializedMatrix = SquareMatrix<BigRational>;

fn t(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(1, e)
}

fn zeta1() -> JonesMatrix {
    let z = LaurentPoly::zero;
    let m = |e| -t(e);
    SquareMatrix::from_rows(vec![
        vec![m(-2), z(), z(), z(), t(3)],
        vec![z(), m(-2), t(-2), z(), z()],
        vec![z(), z(), t(3), z(), z()],
        vec![z(), z(), t(-2), m(-2), z()],
        vec![z(), z(), z(), z(), t(3)],
    ])
    .expect("5x5 literal")
}

fn xi() -> JonesMatrix {
    permutation_matrix(&[2, 4, 0, 1, 3])
}

/// Row `i` has its single 1 in column `cols[i]`.
fn permutation_matrix(cols: &[usize]) -> JonesMatrix {
    SquareMatrix::from_fn(cols.len(), |i, j| {
        if cols[i] == j {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        }
    })
}

struct GeneratorTable {
    forward: [JonesMatrix; 6],
    inverse: [JonesMatrix; 6],
}

fn table() -> &'static GeneratorTable {
    static TABLE: OnceLock<GeneratorTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let z1 = zeta1();
        let x = xi();
        let z1_inv = mat_inverse_unit_det(&z1).expect("det of z1 is a unit");
        let x_inv = x.transpose();
        let mut forward = vec![z1.clone()];
        let mut inverse = vec![z1_inv.clone()];
        for _ in 1..5 {
            let prev_f = forward.last().unwrap();
            let prev_i = inverse.last().unwrap();
            forward.push(&(&x * prev_f) * &x_inv);
            inverse.push(&(&x * prev_i) * &x_inv);
        }
        forward.push(x);
        inverse.push(x_inv);
        GeneratorTable {
            forward: forward.try_into().unwrap(),
            inverse: inverse.try_into().unwrap(),
        }
    })
}

fn slot(letter: Letter) -> usize {
    letter.twist_index().map_or(5, |i| i - 1)
}

pub fn rho_generator(g: Generator) -> &'static JonesMatrix {
    let tab = table();
    let i = slot(g.letter);
    if g.inverse {
        &tab.inverse[i]
    } else {
        &tab.forward[i]
    }
}

pub fn rho_evaluate(w: &GroupWord) -> JonesMatrix {
    let id = SquareMatrix::identity(5, LaurentPoly::one());
    w.letters()
        .iter()
        .fold(id, |acc, &g| &acc * rho_generator(g))
}

pub fn specialize(m: &JonesMatrix, value: &BigRational) -> Result<SpecializedMatrix> {
    if value.is_zero() {
        return Err(Error::ZeroSpecialization);
    }
    m.try_map(|p| p.eval(value))
}

pub fn rho_specialize(w: &GroupWord, value: &BigRational) -> Result<SpecializedMatrix> {
    specialize(&rho_evaluate(w), value)
}

/// `t^6 Id + (t^15 + 1) t^-24 N`, with `N` supported on row 4.
pub fn psi0_closed_form() -> JonesMatrix {
    let one = LaurentPoly::one;
    let row4 = [
        t(10) - one(),
        t(5) - t(10),
        t(10) - one(),
        one() - t(15),
        t(5) - t(10),
    ];
    let factor = &(t(15) + one()) * &t(-24);
    SquareMatrix::from_fn(5, |i, j| {
        let diag = if i == j { t(6) } else { LaurentPoly::zero() };
        if i == 3 {
            &diag + &(&factor * &row4[j])
        } else {
            diag
        }
    })
}

/// The intertwiner between `P = rho|_{t=-1}` and the action on `Λ²H/ω`.
pub fn f_matrix() -> SquareMatrix<BigInt> {
    let rows: [[i64; 5]; 5] = [
        [0, -1, 0, 0, 0],
        [0, 0, 0, 0, -1],
        [1, 0, 0, 0, 0],
        [0, 0, 1, 1, -1],
        [0, 0, 0, 1, 0],
    ];
    SquareMatrix::from_fn(5, |i, j| BigInt::from(rows[i][j]))
}

/// `P(g)` at `t = -1`, which has integer entries.
pub fn minus_one_matrix(w: &GroupWord) -> SquareMatrix<BigInt> {
    let m = rho_specialize(w, &-BigRational::one()).expect("t = -1 is nonzero");
    m.map(|x| x.to_integer())
}

/// Outcome of testing `P(g) F = sign * F * W(g)` for `g = z1, xi`, where
/// `W(g)` is the action on `Λ²H/ω`.
#[derive(Clone, Debug)]
pub struct EquivalenceCheck {
    pub zeta_holds: bool,
    pub xi_holds: bool,
    pub z: SquareMatrix<BigInt>,
    pub x: SquareMatrix<BigInt>,
}

impl EquivalenceCheck {
    pub fn holds(&self) -> bool {
        self.zeta_holds && self.xi_holds
    }
}

pub fn check_minus_one_equivalence() -> EquivalenceCheck {
    check_minus_one_equivalence_with(&f_matrix(), -1)
}

pub fn check_minus_one_equivalence_with(f: &SquareMatrix<BigInt>, sign: i64) -> EquivalenceCheck {
    let sign = BigInt::from(sign);
    let test = |letter| {
        let w = GroupWord::generator(Generator::new(letter));
        let p = minus_one_matrix(&w);
        let wm = wedge_action(symplectic_action(&w).matrix());
        let holds = &p * f == (f * &wm).scale(&sign);
        (holds, wm)
    };
    let (zeta_holds, z) = test(Letter::Z1);
    let (xi_holds, x) = test(Letter::Xi);
    EquivalenceCheck {
        zeta_holds,
        xi_holds,
        z,
        x,
    }
}

/// Named defining relations, each holding iff both sides agree exactly.
pub fn relation_checks() -> Vec<(String, bool)> {
    let rho = |w: GroupWord| rho_evaluate(&w);
    let z = |i: usize| GroupWord::generator(Generator::new(Letter::ALL[i - 1]));
    let mut out = Vec::new();
    for i in 1..=5 {
        for j in (i + 1)..=5 {
            let (lhs, rhs, name) = if j == i + 1 {
                (
                    z(i).concat(&z(j)).concat(&z(i)),
                    z(j).concat(&z(i)).concat(&z(j)),
                    format!("z{i} z{j} z{i} = z{j} z{i} z{j}"),
                )
            } else {
                (
                    z(i).concat(&z(j)),
                    z(j).concat(&z(i)),
                    format!("z{i} z{j} = z{j} z{i}"),
                )
            };
            out.push((name, rho(lhs) == rho(rhs)));
        }
    }
    let xi = GroupWord::generator(Generator::new(Letter::Xi));
    out.push(("xi^6 = 1".into(), rho(xi.pow(6)).is_identity()));
    let iota = rho(GroupWord::iota());
    out.push(("iota^2 = 1".into(), (&iota * &iota).is_identity()));
    let central = (1..=5).all(|i| {
        let m = rho(z(i));
        &iota * &m == &m * &iota
    });
    out.push(("iota central".into(), central));
    out
}
