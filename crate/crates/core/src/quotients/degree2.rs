//! The quotient `φ^(2)(I_2) / φ^(2)([M_2, I_2])` in the class-2 group of
//! truncated units, and the order of `φ^(2)(ψ0)` in it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::nilpotent::{NilpotentElement, NilpotentSubgroupData};
use super::CyclicOrder;
use crate::error::{Error, Result};
use crate::expansion::{phi_coefficients, QMatrix};
use crate::words::{Generator, GroupWord};

/// `φ^(2)` of a word and of its inverse, for conjugation.
#[derive(Clone, Debug)]
pub struct Conjugator {
    pub word: GroupWord,
    forward: [QMatrix; 3],
    backward: [QMatrix; 3],
}

fn truncated(w: &GroupWord) -> [QMatrix; 3] {
    phi_coefficients(w, 2)
        .try_into()
        .expect("three coefficients")
}

impl Conjugator {
    pub fn new(word: GroupWord) -> Self {
        Conjugator {
            forward: truncated(&word),
            backward: truncated(&word.inverse()),
            word,
        }
    }

    pub fn apply(&self, x: &NilpotentElement) -> NilpotentElement {
        x.conjugate(&self.forward, &self.backward)
    }

    /// `[w, x] = w x w^-1 x^-1`.
    pub fn commutator_with(&self, x: &NilpotentElement) -> NilpotentElement {
        self.apply(x).mul(&x.inverse())
    }
}

/// `φ^(2)(w)` for a Torelli word.
pub fn phi2(w: &GroupWord) -> Result<NilpotentElement> {
    NilpotentElement::from_coefficients(&phi_coefficients(w, 2))
}

pub fn generator_conjugators() -> Vec<Conjugator> {
    Generator::all()
        .map(|g| Conjugator::new(GroupWord::generator(g)))
        .collect()
}

/// Closes `data` under conjugation by `conjugators`.
pub fn normal_closure(
    mut data: NilpotentSubgroupData,
    conjugators: &[Conjugator],
    cap: usize,
) -> Result<NilpotentSubgroupData> {
    for _ in 0..cap {
        let mut elements: Vec<NilpotentElement> = data.lifts().cloned().collect();
        elements.extend(data.central().rational_basis().into_iter().map(|b| {
            NilpotentElement::new(
                QMatrix::identity(5, BigRational::zero()).zero(),
                super::degree1::to_matrix(&b),
            )
        }));
        let mut changed = false;
        for x in &elements {
            for c in conjugators {
                changed |= data.insert(c.apply(x));
            }
        }
        if !changed {
            return Ok(data);
        }
    }
    Err(Error::IterationCap {
        cap,
        diagnostics: format!(
            "degree-1 rank {}, central rank {}",
            data.degree1_rank(),
            data.central_rank()
        ),
    })
}

/// Words of length `1..=depth` in the signed generators, freely reduced and deduplicated.
pub fn words_up_to(depth: usize) -> Vec<GroupWord> {
    let gens: Vec<GroupWord> = Generator::all().map(GroupWord::generator).collect();
    let mut out: Vec<GroupWord> = Vec::new();
    let mut level = vec![GroupWord::identity()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &level {
            for g in &gens {
                let x = w.concat(g);
                if x.len() == w.len() + 1 {
                    next.push(x);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

const CLOSURE_CAP: usize = 64;

#[derive(Clone, Debug)]
pub struct Degree2Quotient {
    /// `φ^(2)(I_2)`.
    pub image: NilpotentSubgroupData,
    /// `φ^(2)([M_2, I_2])`.
    pub commutators: NilpotentSubgroupData,
    pub order: CyclicOrder,
    pub seeds: usize,
}

/// `K` is the normal closure of `φ^(2)([w, u ψ0 u^-1])` over words `w`, `u` of
/// length at most `depth` (`u` possibly empty); `G` is the normal closure of
/// `φ^(2)(ψ0)`. Returns the least `n <= cap` with `φ^(2)(ψ0)^n ∈ K`.
pub fn cyclic_order_degree2(depth: usize, cap: u64) -> Result<Degree2Quotient> {
    if depth == 0 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    let gens = generator_conjugators();
    let psi = phi2(&GroupWord::psi0())?;

    let mut image = NilpotentSubgroupData::trivial();
    image.insert(psi.clone());
    let image = normal_closure(image, &gens, CLOSURE_CAP)?;

    let words = words_up_to(depth);
    let conjugates: Vec<NilpotentElement> = std::iter::once(psi.clone())
        .chain(words.iter().map(|u| Conjugator::new(u.clone()).apply(&psi)))
        .collect();
    let mut commutators = NilpotentSubgroupData::trivial();
    let mut seeds = 0;
    for w in &words {
        let c = Conjugator::new(w.clone());
        for u in &conjugates {
            commutators.insert(c.commutator_with(u));
            seeds += 1;
        }
    }
    let commutators = normal_closure(commutators, &gens, CLOSURE_CAP)?;
    let order = order_in(&psi, &commutators, cap);
    Ok(Degree2Quotient {
        image,
        commutators,
        order,
        seeds,
    })
}

/// Least `n` in `1..=cap` with `x^n ∈ S`.
pub fn order_in(x: &NilpotentElement, s: &NilpotentSubgroupData, cap: u64) -> CyclicOrder {
    (1..=cap)
        .find(|&n| s.contains(&x.pow(&BigInt::from(n))))
        .map_or(CyclicOrder::ExceedsCap(cap), CyclicOrder::Finite)
}
