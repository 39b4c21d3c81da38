//! Words in the generators `z1..z5` (chain Dehn twists) and `xi = z1 z2 z3 z4 z5`
//! of the genus-2 mapping class group, their action on first homology, and
//! Torelli membership.
//!
//! Word syntax, as accepted by [`parse_word`]:
//!
//! ```text
//! word   := item*
//! item   := atom suffix*
//! atom   := z1 | z2 | z3 | z4 | z5 | xi | psi0 | iota
//!         | '(' word ')' | '[' word ',' word ']'
//! suffix := '^' integer | '\''
//! ```
//!
//! `x'` and `x^-1` both denote the inverse; `[u, v]` is `u v u^-1 v^-1`.
//! The macros are `psi0 = (z1 z2 z1)^4`, the twist along the separating curve,
//! and `iota = z1 z2 z3 z4 z5 z5 z4 z3 z2 z1`, the hyperelliptic involution.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::SquareMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Z1,
    Z2,
    Z3,
    Z4,
    Z5,
    Xi,
}

impl Letter {
    pub const ALL: [Letter; 6] = [
        Letter::Z1,
        Letter::Z2,
        Letter::Z3,
        Letter::Z4,
        Letter::Z5,
        Letter::Xi,
    ];

    /// The chain index `1..=5` of a twist letter.
    pub fn twist_index(self) -> Option<usize> {
        match self {
            Letter::Z1 => Some(1),
            Letter::Z2 => Some(2),
            Letter::Z3 => Some(3),
            Letter::Z4 => Some(4),
            Letter::Z5 => Some(5),
            Letter::Xi => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Letter::Z1 => "z1",
            Letter::Z2 => "z2",
            Letter::Z3 => "z3",
            Letter::Z4 => "z4",
            Letter::Z5 => "z5",
            Letter::Xi => "xi",
        }
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub letter: Letter,
    pub inverse: bool,
}

impl Generator {
    pub const fn new(letter: Letter) -> Self {
        Generator {
            letter,
            inverse: false,
        }
    }

    pub const fn inv(letter: Letter) -> Self {
        Generator {
            letter,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Self {
        Generator {
            letter: self.letter,
            inverse: !self.inverse,
        }
    }

    /// All twelve signed generators.
    pub fn all() -> impl Iterator<Item = Generator> {
        Letter::ALL
            .into_iter()
            .flat_map(|l| [Generator::new(l), Generator::inv(l)])
    }

    /// `z1`, `xi` and their inverses, which already generate the group.
    pub fn basic() -> [Generator; 4] {
        [
            Generator::new(Letter::Z1),
            Generator::inv(Letter::Z1),
            Generator::new(Letter::Xi),
            Generator::inv(Letter::Xi),
        ]
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.letter.name())
        } else {
            write!(f, "{}", self.letter.name())
        }
    }
}

/// A freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    letters: Vec<Generator>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn new(letters: impl IntoIterator<Item = Generator>) -> Self {
        let mut out: Vec<Generator> = Vec::new();
        for g in letters {
            if out.last() == Some(&g.inverted()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        GroupWord { letters: out }
    }

    pub fn generator(g: Generator) -> Self {
        GroupWord { letters: vec![g] }
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        GroupWord::new(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> GroupWord {
        invert_word(self)
    }

    pub fn pow(&self, e: i64) -> GroupWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let reps = e.unsigned_abs() as usize;
        GroupWord::new(std::iter::repeat_n(base.letters.iter().copied(), reps).flatten())
    }

    /// `g w g^-1`.
    pub fn conjugated_by(&self, g: &GroupWord) -> GroupWord {
        g.concat(self).concat(&g.inverse())
    }

    /// `[x, y] = x y x^-1 y^-1`.
    pub fn commutator(x: &GroupWord, y: &GroupWord) -> GroupWord {
        x.concat(y).concat(&x.inverse()).concat(&y.inverse())
    }

    /// The separating twist `(z1 z2 z1)^4`.
    pub fn psi0() -> GroupWord {
        let g = |l| Generator::new(l);
        GroupWord::new([g(Letter::Z1), g(Letter::Z2), g(Letter::Z1)]).pow(4)
    }

    /// The hyperelliptic involution `z1 z2 z3 z4 z5 z5 z4 z3 z2 z1`.
    pub fn iota() -> GroupWord {
        let fwd = [Letter::Z1, Letter::Z2, Letter::Z3, Letter::Z4, Letter::Z5];
        GroupWord::new(
            fwd.iter()
                .chain(fwd.iter().rev())
                .map(|&l| Generator::new(l)),
        )
    }

    /// `xi` as the product `z1 z2 z3 z4 z5`.
    pub fn xi_as_twists() -> GroupWord {
        GroupWord::new(
            [Letter::Z1, Letter::Z2, Letter::Z3, Letter::Z4, Letter::Z5].map(Generator::new),
        )
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Reverses the word and flips every sign.
pub fn invert_word(w: &GroupWord) -> GroupWord {
    GroupWord {
        letters: w.letters.iter().rev().map(|g| g.inverted()).collect(),
    }
}

pub fn parse_word(text: &str) -> Result<GroupWord> {
    let mut p = Parser { src: text, pos: 0 };
    let w = p.word()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error(format!("unexpected {:?}", p.peek().unwrap())));
    }
    Ok(w)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: String) -> Error {
        Error::Parse {
            position: self.pos,
            message,
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn word(&mut self) -> Result<GroupWord> {
        let mut acc = GroupWord::identity();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') | Some(']') | Some(',') => return Ok(acc),
                _ => {
                    let item = self.item()?;
                    acc = acc.concat(&item);
                }
            }
        }
    }

    fn item(&mut self) -> Result<GroupWord> {
        let mut w = self.atom()?;
        loop {
            match self.peek() {
                Some('\'') => {
                    self.pos += 1;
                    w = w.inverse();
                }
                Some('^') => {
                    self.pos += 1;
                    let start = self.pos;
                    if self.peek() == Some('-') {
                        self.pos += 1;
                    }
                    while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        self.pos += 1;
                    }
                    let e: i64 = self.src[start..self.pos]
                        .parse()
                        .map_err(|_| Error::Parse {
                            position: start,
                            message: "expected an integer exponent after '^'".into(),
                        })?;
                    w = w.pow(e);
                }
                _ => return Ok(w),
            }
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}")))
        }
    }

    fn atom(&mut self) -> Result<GroupWord> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let x = self.word()?;
                self.expect(',')?;
                let y = self.word()?;
                self.expect(']')?;
                Ok(GroupWord::commutator(&x, &y))
            }
            _ => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    self.pos += 1;
                }
                let token = &self.src[start..self.pos];
                let letter = |l| Ok(GroupWord::generator(Generator::new(l)));
                match token {
                    "z1" => letter(Letter::Z1),
                    "z2" => letter(Letter::Z2),
                    "z3" => letter(Letter::Z3),
                    "z4" => letter(Letter::Z4),
                    "z5" => letter(Letter::Z5),
                    "xi" => letter(Letter::Xi),
                    "psi0" => Ok(GroupWord::psi0()),
                    "iota" => Ok(GroupWord::iota()),
                    "" => Err(Error::Parse {
                        position: start,
                        message: format!(
                            "unexpected {:?}",
                            self.peek()
                                .map_or("end of input".to_string(), |c| c.to_string())
                        ),
                    }),
                    other => Err(Error::Parse {
                        position: start,
                        message: format!("unknown token {other:?}"),
                    }),
                }
            }
        }
    }
}

/// Integer `4 x 4` matrix on `H_1` in the symplectic basis `(x1, x2, y1, y2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix(pub SquareMatrix<BigInt>);

/// The intersection form `J = [[0, I], [-I, 0]]`, so that `<x_i, y_i> = 1`.
pub fn symplectic_form() -> SquareMatrix<BigInt> {
    int4([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
}

fn int4(rows: [[i64; 4]; 4]) -> SquareMatrix<BigInt> {
    SquareMatrix::from_fn(4, |i, j| BigInt::from(rows[i][j]))
}

/// Homology classes of the chain curves `C1..C5` in `(x1, x2, y1, y2)` coordinates.
///
/// `[C_{i+1}] = ±xi_*[C_i]`, and together with the twist convention of
/// [`twist_matrix`] these make the action on `Λ²H/ω` intertwine with the
/// `t = -1` specialization of the Jones representation.
pub const CHAIN_CLASSES: [[i64; 4]; 5] = [
    [0, 0, 1, 0],  // y1
    [1, 0, 0, 0],  // x1
    [0, 0, -1, 1], // y2 - y1
    [0, 1, 0, 0],  // x2
    [0, 0, 0, 1],  // y2
];

/// Matrix of `u -> u - <u, c> c` on column vectors.
pub fn twist_matrix(c: &[i64; 4]) -> SquareMatrix<BigInt> {
    let j = symplectic_form();
    // <u, c> = u^T J c, so the map is I + c c^T J  (J^T = -J).
    let cc = SquareMatrix::from_fn(4, |r, s| BigInt::from(c[r] * c[s]));
    let id = SquareMatrix::identity(4, BigInt::one());
    &id + &(&cc * &j)
}

fn generator_action(g: Generator) -> SquareMatrix<BigInt> {
    let m = match g.letter.twist_index() {
        Some(i) => twist_matrix(&CHAIN_CLASSES[i - 1]),
        None => CHAIN_CLASSES
            .iter()
            .map(twist_matrix)
            .reduce(|a, b| &a * &b)
            .unwrap(),
    };
    if g.inverse {
        symplectic_inverse(&m)
    } else {
        m
    }
}

/// `M^-1 = -J M^T J` for symplectic `M`.
fn symplectic_inverse(m: &SquareMatrix<BigInt>) -> SquareMatrix<BigInt> {
    let j = symplectic_form();
    (&(&j * &m.transpose()) * &j).neg()
}

/// Action of a word on `H_1(Σ_2; Z)`; the letters multiply left to right.
pub fn symplectic_action(w: &GroupWord) -> SymplecticMatrix {
    let id = SquareMatrix::identity(4, BigInt::one());
    SymplecticMatrix(
        w.letters()
            .iter()
            .fold(id, |acc, &g| &acc * &generator_action(g)),
    )
}

impl SymplecticMatrix {
    pub fn matrix(&self) -> &SquareMatrix<BigInt> {
        &self.0
    }

    pub fn preserves_form(&self) -> bool {
        let j = symplectic_form();
        &(&self.0.transpose() * &j) * &self.0 == j
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// Dimension of the fixed sublattice `ker(M - I)`.
    pub fn fixed_rank(&self) -> usize {
        let diff = &self.0 - &self.0.one();
        let rows: Vec<_> = diff
            .rows()
            .map(|r| {
                r.iter()
                    .map(|x| num_rational::BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        4 - crate::arith::rational_rank(&rows)
    }
}

pub fn is_torelli(w: &GroupWord) -> bool {
    symplectic_action(w).is_identity()
}

/// Number of letters counted with sign `±1`; its parity is the image in `Z/2`
/// that the sign character of the `t = -1` specialization sees.
pub fn exponent_sum(w: &GroupWord) -> i64 {
    w.letters()
        .iter()
        .map(|g| {
            let weight = if g.letter == Letter::Xi { 5 } else { 1 };
            if g.inverse {
                -weight
            } else {
                weight
            }
        })
        .sum()
}

impl Default for SymplecticMatrix {
    fn default() -> Self {
        SymplecticMatrix(SquareMatrix::identity(4, BigInt::one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GroupWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn cancelling_pair_is_empty() {
        assert!(w("z1 z1^-1").is_empty());
        assert!(w("z1 z1'").is_empty());
    }

    #[test]
    fn psi0_macro_expands() {
        let p = w("psi0");
        assert_eq!(p.len(), 12);
        assert_eq!(p, w("(z1 z2 z1)^4"));
    }

    #[test]
    fn conjugate_by_xi() {
        assert_eq!(w("xi z1 xi^-1").len(), 3);
    }

    #[test]
    fn invert_examples() {
        assert!(invert_word(&GroupWord::identity()).is_empty());
        assert_eq!(invert_word(&w("z1 xi")), w("xi^-1 z1^-1"));
        let p = GroupWord::psi0();
        assert!(p.concat(&invert_word(&p)).is_empty());
        assert_eq!(invert_word(&p), w("(z1' z2' z1')^4"));
    }

    #[test]
    fn commutator_syntax() {
        assert_eq!(w("[z1, z2]"), w("z1 z2 z1^-1 z2^-1"));
        assert_eq!(w("[psi0, xi psi0 xi']").len(), 2 * 12 + 2 * 14);
    }

    #[test]
    fn parse_errors_report_position() {
        match parse_word("z1 z7 xi") {
            Err(Error::Parse { position, message }) => {
                assert_eq!(position, 3);
                assert!(message.contains("z7"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_word("(z1"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_word("z1^x"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_word("z1 )"),
            Err(Error::Parse { position: 3, .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        let x = w("z1 xi^-1 z3 z3");
        assert_eq!(w(&x.to_string()), x);
        assert_eq!(GroupWord::identity().to_string(), "1");
    }

    #[test]
    fn empty_word_acts_trivially() {
        assert!(symplectic_action(&GroupWord::identity()).is_identity());
    }

    #[test]
    fn psi0_is_torelli() {
        assert!(symplectic_action(&GroupWord::psi0()).is_identity());
        assert!(is_torelli(&GroupWord::psi0()));
    }

    #[test]
    fn z1_is_a_transvection() {
        let m = symplectic_action(&w("z1"));
        assert!(!m.is_identity());
        assert_eq!(m.fixed_rank(), 3);
        // u -> u - <u, y1> y1 sends x1 to x1 - y1.
        let x1_image: Vec<i64> = (0..4)
            .map(|r| i64::try_from(m.matrix().get(r, 0).clone()).unwrap())
            .collect();
        assert_eq!(x1_image, vec![1, 0, -1, 0]);
        assert!(!is_torelli(&w("z1")));
    }

    #[test]
    fn conjugates_of_psi0_are_torelli() {
        for s in ["z1", "xi z3'", "z5 z2 z2 xi'"] {
            let g = w(s);
            assert!(is_torelli(&GroupWord::psi0().conjugated_by(&g)));
        }
    }

    #[test]
    fn braid_relations_in_homology() {
        let z: Vec<GroupWord> = (1..=5).map(|i| w(&format!("z{i}"))).collect();
        for i in 0..5 {
            for j in 0..5 {
                let a = symplectic_action(&z[i]).0;
                let b = symplectic_action(&z[j]).0;
                if i.abs_diff(j) == 1 {
                    assert_eq!(&(&a * &b) * &a, &(&b * &a) * &b, "z{} z{}", i + 1, j + 1);
                } else {
                    assert_eq!(&a * &b, &b * &a);
                }
            }
        }
    }

    #[test]
    fn xi_is_product_of_twists() {
        assert_eq!(
            symplectic_action(&w("xi")),
            symplectic_action(&GroupWord::xi_as_twists())
        );
        for i in 1..5 {
            let lhs = symplectic_action(&w(&format!("xi z{i} xi^-1")));
            let rhs = symplectic_action(&w(&format!("z{}", i + 1)));
            assert_eq!(lhs, rhs);
        }
        assert!(symplectic_action(&w("xi^6")).is_identity());
    }

    #[test]
    fn generators_preserve_the_form() {
        for g in Generator::all() {
            assert!(symplectic_action(&GroupWord::generator(g)).preserves_form());
        }
    }
}
