use std::collections::HashSet;

use super::{
    bracket_module, e, end_to_matrix, highest_weight_submodule, identify_module, matrix_to_end,
};
use super::{Decomposition, Gamma, Submodule, END_DIM};
use crate::arith::{QVector, RationalSpan};
use crate::error::Result;
use crate::expansion::{conjugation_action, delta_k, DeltaClass};
use crate::jones::f_matrix;
use crate::words::{Generator, GroupWord};

/// `F^-1 d F` read in the basis `E_{i,j}`.
pub fn graded_identification(d: &DeltaClass) -> QVector {
    let f = f_matrix().to_rational();
    let f_inv = f.inverse().expect("F is unimodular");
    matrix_to_end(&(&(&f_inv * &d.matrix) * &f))
}

/// The class `F E F^-1` in degree `degree` corresponding to `v`.
pub fn identified_class(v: &[num_rational::BigRational], degree: usize) -> DeltaClass {
    let f = f_matrix().to_rational();
    let f_inv = f.inverse().expect("F is unimodular");
    DeltaClass {
        degree,
        matrix: &(&f * &end_to_matrix(v)) * &f_inv,
    }
}

/// Rational span of the conjugation orbit of `δ_1(ψ0)`, identified into `End(Γ_{0,1})`.
#[derive(Clone, Debug)]
pub struct OrbitSpan {
    pub span: RationalSpan,
    /// Word length at which the search stopped.
    pub depth: usize,
    /// Number of distinct orbit vectors visited.
    pub orbit_size: usize,
    /// Every generator maps every basis vector of `span` back into `span`.
    pub stable: bool,
    pub equals_gamma02: bool,
}

fn is_stable(span: &RationalSpan, gens: &[GroupWord]) -> bool {
    span.basis().iter().all(|v| {
        let d = identified_class(v, 1);
        gens.iter()
            .all(|g| span.contains(&graded_identification(&conjugation_action(g, &d))))
    })
}

/// Breadth-first search over conjugating words of length at most `max_depth`
/// in `z1..z5, xi` and their inverses, stopping once the span is stable.
pub fn orbit_span(max_depth: usize) -> Result<OrbitSpan> {
    let gens: Vec<GroupWord> = Generator::all().map(GroupWord::generator).collect();
    let start = delta_k(&GroupWord::psi0(), 1)?;
    let mut seen: HashSet<QVector> = HashSet::new();
    let mut span = RationalSpan::zero(END_DIM);
    seen.insert(graded_identification(&start));
    span.insert(&graded_identification(&start));
    let mut frontier = vec![start];
    let mut depth = 0;
    let mut stable = is_stable(&span, &gens);
    while !stable && depth < max_depth {
        depth += 1;
        let mut next = Vec::new();
        for d in &frontier {
            for g in &gens {
                let image = conjugation_action(g, d);
                let v = graded_identification(&image);
                if seen.insert(v.clone()) {
                    span.insert(&v);
                    next.push(image);
                }
            }
        }
        frontier = next;
        stable = is_stable(&span, &gens);
    }
    let gamma02 = highest_weight_submodule(&e(1, 2))?;
    Ok(OrbitSpan {
        equals_gamma02: &span == gamma02.span(),
        span,
        depth,
        orbit_size: seen.len(),
        stable,
    })
}

#[derive(Clone, Debug)]
pub struct LowerCentralSeries {
    /// `(k, dim C_k, decomposition of C_k)` for `k = 1..=max_k`.
    pub rows: Vec<(usize, usize, Decomposition)>,
}

impl LowerCentralSeries {
    /// `C_k` is `Γ_{0,2}` for odd `k` and `Γ_{2,0}` for even `k`.
    pub fn alternates(&self) -> bool {
        self.rows
            .iter()
            .all(|(k, _, d)| d.is(&[expected_constituent(*k)]))
    }
}

pub fn expected_constituent(k: usize) -> Gamma {
    if k % 2 == 1 {
        Gamma { a: 0, b: 2 }
    } else {
        Gamma { a: 2, b: 0 }
    }
}

/// `C_1 = Γ_{0,2}`, `C_{k+1} = [C_1, C_k]`.
pub fn lower_central_series(max_k: usize) -> Result<LowerCentralSeries> {
    let c1 = highest_weight_submodule(&e(1, 2))?;
    let mut rows = Vec::new();
    let mut current: Submodule = c1.clone();
    for k in 1..=max_k {
        if k > 1 {
            current = bracket_module(&c1, &current)?;
        }
        rows.push((k, current.dim(), identify_module(&current)?));
    }
    Ok(LowerCentralSeries { rows })
}
