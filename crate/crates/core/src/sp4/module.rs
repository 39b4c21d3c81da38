use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::{
    act_on_end, chevalley_basis, end_to_matrix, end_weight, matrix_to_end, weight_of, Root, Weight,
    END_DIM,
};
use crate::arith::{QVector, RationalSpan};
use crate::error::{Error, Result};

/// An `sp(4)`-stable subspace of `End(Γ_{0,1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    span: RationalSpan,
}

impl Submodule {
    /// Checks closure under the Chevalley basis.
    pub fn new(span: RationalSpan) -> Result<Self> {
        assert_eq!(span.ambient_dim(), END_DIM);
        let basis = chevalley_basis();
        for a in basis.all() {
            for v in span.basis() {
                if !span.contains(&act_on_end(a, v)) {
                    return Err(Error::NotSubmodule);
                }
            }
        }
        Ok(Submodule { span })
    }

    pub fn from_vectors(vectors: &[QVector]) -> Result<Self> {
        Submodule::new(RationalSpan::from_vectors(END_DIM, vectors))
    }

    pub fn zero() -> Self {
        Submodule {
            span: RationalSpan::zero(END_DIM),
        }
    }

    pub fn full() -> Self {
        Submodule {
            span: RationalSpan::full(END_DIM),
        }
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn span(&self) -> &RationalSpan {
        &self.span
    }

    pub fn basis(&self) -> &[QVector] {
        self.span.basis()
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.span.contains(v)
    }

    /// The subspace of vectors of weight `w`.
    pub fn weight_space(&self, w: Weight) -> RationalSpan {
        let coordinate = RationalSpan::from_vectors(
            END_DIM,
            &(0..END_DIM)
                .filter(|&i| end_weight(i) == w)
                .map(|i| crate::arith::linalg::unit_vector(END_DIM, i))
                .collect::<Vec<_>>(),
        );
        self.span.intersection(&coordinate)
    }
}

/// Weight spaces of a submodule, in table row order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    pub rows: Vec<(Weight, RationalSpan)>,
}

impl WeightTable {
    pub fn dims(&self) -> Vec<(Weight, usize)> {
        self.rows.iter().map(|(w, s)| (*w, s.dim())).collect()
    }

    pub fn total(&self) -> usize {
        self.rows.iter().map(|(_, s)| s.dim()).sum()
    }

    pub fn get(&self, w: Weight) -> Option<&RationalSpan> {
        self.rows.iter().find(|(x, _)| *x == w).map(|(_, s)| s)
    }

    pub fn dim_of(&self, w: Weight) -> usize {
        self.get(w).map_or(0, RationalSpan::dim)
    }
}

fn sort_table_order(weights: &mut [Weight]) {
    weights.sort_by_key(|w| {
        let pos = super::TABLE_WEIGHT_ORDER.iter().position(|x| x == w);
        (pos.is_none(), pos, std::cmp::Reverse(*w))
    });
}

/// Simultaneous Cartan eigenspaces of `S`; weights with zero-dimensional spaces are omitted.
pub fn weight_table(s: &Submodule) -> Result<WeightTable> {
    let mut weights: Vec<Weight> = (0..END_DIM).map(end_weight).collect();
    weights.sort();
    weights.dedup();
    sort_table_order(&mut weights);
    let rows: Vec<(Weight, RationalSpan)> = weights
        .into_iter()
        .map(|w| (w, s.weight_space(w)))
        .filter(|(_, sp)| sp.dim() > 0)
        .collect();
    let table = WeightTable { rows };
    if table.total() != s.dim() {
        return Err(Error::NonSemisimple);
    }
    Ok(table)
}

/// Vectors of weight `w` in `S` killed by every raising operator.
pub fn highest_weight_vectors(s: &Submodule, w: Weight) -> RationalSpan {
    let space = s.weight_space(w);
    if space.dim() == 0 {
        return space;
    }
    let basis = chevalley_basis();
    // Solve for coefficients c with X_α(Σ c_i v_i) = 0 for every α.
    let vs = space.basis();
    let mut system: Vec<QVector> = Vec::new();
    for x in &basis.x {
        let images: Vec<QVector> = vs.iter().map(|v| act_on_end(x, v)).collect();
        for coord in 0..END_DIM {
            system.push(images.iter().map(|img| img[coord].clone()).collect());
        }
    }
    let vectors: Vec<QVector> = crate::arith::nullspace(&system, vs.len())
        .into_iter()
        .map(|c| {
            let mut out = vec![BigRational::zero(); END_DIM];
            for (ci, v) in c.iter().zip(vs) {
                for (o, x) in out.iter_mut().zip(v) {
                    *o += ci * x;
                }
            }
            out
        })
        .collect();
    RationalSpan::from_vectors(END_DIM, &vectors)
}

/// Span of `v` under repeated lowering operators.
pub fn highest_weight_submodule(v: &[BigRational]) -> Result<Submodule> {
    if v.iter().all(Zero::is_zero) || weight_of(v).is_none() {
        return Err(Error::NotWeightVector);
    }
    let basis = chevalley_basis();
    for (root, x) in Root::POSITIVE.iter().zip(&basis.x) {
        if !act_on_end(x, v).iter().all(Zero::is_zero) {
            return Err(Error::NotHighestWeight {
                root: root.to_string(),
            });
        }
    }
    let mut span = RationalSpan::zero(END_DIM);
    let mut queue = vec![v.to_vec()];
    span.insert(v);
    while let Some(u) = queue.pop() {
        for y in &basis.y {
            let image = act_on_end(y, &u);
            if span.insert(&image) {
                queue.push(image);
            }
        }
    }
    Submodule::new(span)
}

/// The irreducible `Γ_{a,b}` of highest weight `a L1 + b (L1 + L2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gamma {
    pub a: i64,
    pub b: i64,
}

impl Gamma {
    pub fn from_highest_weight(w: Weight) -> Self {
        Gamma {
            a: w.a - w.b,
            b: w.b,
        }
    }

    pub fn highest_weight(self) -> Weight {
        Weight::new(self.a + self.b, self.b)
    }

    /// Weyl dimension formula for `sp(4)`.
    pub fn dim(self) -> usize {
        let (a, b) = (self.a + 1, self.b + 1);
        usize::try_from(a * b * (a + b) * (a + 2 * b) / 6).expect("dominant weight")
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gamma_{{{},{}}}", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constituent {
    pub gamma: Gamma,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub constituents: Vec<Constituent>,
}

impl Decomposition {
    /// Labels with multiplicity, highest weights first.
    pub fn labels(&self) -> Vec<Gamma> {
        self.constituents
            .iter()
            .flat_map(|c| std::iter::repeat_n(c.gamma, c.multiplicity))
            .collect()
    }

    pub fn is(&self, labels: &[Gamma]) -> bool {
        self.labels() == labels
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .labels()
            .iter()
            .map(|g| format!("{g}({})", g.dim()))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Constituents allowed inside `End(Γ_{0,1})`, in peeling order.
pub const ALLOWED: [Gamma; 3] = [
    Gamma { a: 0, b: 2 },
    Gamma { a: 2, b: 0 },
    Gamma { a: 0, b: 0 },
];

/// Splits `S` into irreducibles by generating a submodule from every highest
/// weight vector, highest weights first.
pub fn identify_module(s: &Submodule) -> Result<Decomposition> {
    weight_table(s)?;
    let mut weights: Vec<Weight> = (0..END_DIM).map(end_weight).collect();
    weights.sort();
    weights.dedup();
    weights.reverse();

    let mut peeled = RationalSpan::zero(END_DIM);
    let mut found: BTreeMap<std::cmp::Reverse<Weight>, usize> = BTreeMap::new();
    for w in weights {
        let hw = highest_weight_vectors(s, w);
        if hw.dim() == 0 {
            continue;
        }
        let gamma = Gamma::from_highest_weight(w);
        if !ALLOWED.contains(&gamma) {
            return Err(Error::UnexpectedConstituent(format!(
                "highest weight {w} ({gamma})"
            )));
        }
        for v in hw.basis() {
            let sub = highest_weight_submodule(v)?;
            if sub.dim() != gamma.dim() {
                return Err(Error::UnexpectedConstituent(format!(
                    "{gamma} generated a {}-dimensional module",
                    sub.dim()
                )));
            }
            peeled = peeled.sum(sub.span());
        }
        *found.entry(std::cmp::Reverse(w)).or_default() += hw.dim();
    }
    if peeled.dim() != s.dim() {
        return Err(Error::UnexpectedConstituent(format!(
            "{} of {} dimensions left after peeling",
            s.dim() - peeled.dim(),
            s.dim()
        )));
    }
    Ok(Decomposition {
        constituents: found
            .into_iter()
            .map(|(std::cmp::Reverse(w), m)| Constituent {
                gamma: Gamma::from_highest_weight(w),
                multiplicity: m,
            })
            .collect(),
    })
}

/// Span of `[A, B] = AB - BA` over spanning vectors.
pub fn bracket_module(s: &Submodule, t: &Submodule) -> Result<Submodule> {
    let mut span = RationalSpan::zero(END_DIM);
    for a in s.basis() {
        let am = end_to_matrix(a);
        for b in t.basis() {
            span.insert(&matrix_to_end(&am.commutator(&end_to_matrix(b))));
            if span.dim() == END_DIM {
                break;
            }
        }
    }
    Submodule::new(span)
}
