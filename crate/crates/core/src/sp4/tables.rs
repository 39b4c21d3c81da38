//! Reference weight-space bases of `Γ_{0,1} ⊗ Γ_{0,1}^*` and of `Γ_{0,2}`.

use super::{end_vector, Weight};
use crate::arith::QVector;

pub const TABLE_WEIGHT_ORDER: [Weight; 13] = [
    Weight::new(2, 2),
    Weight::new(1, 1),
    Weight::new(2, 0),
    Weight::new(0, 2),
    Weight::new(2, -2),
    Weight::new(1, -1),
    Weight::new(0, 0),
    Weight::new(-1, 1),
    Weight::new(-2, 2),
    Weight::new(0, -2),
    Weight::new(-2, 0),
    Weight::new(-1, -1),
    Weight::new(-2, -2),
];

/// Per weight, basis vectors given as `(coefficient, i, j)` terms.
type TableData<'a> = [&'a [&'a [(i64, usize, usize)]]; 13];

fn rows(data: TableData) -> Vec<(Weight, Vec<QVector>)> {
    TABLE_WEIGHT_ORDER
        .iter()
        .zip(data)
        .map(|(w, vs)| (*w, vs.iter().map(|t| end_vector(t)).collect()))
        .collect()
}

/// Rows of the weight-space table of the full 25-dimensional space.
pub fn table1() -> Vec<(Weight, Vec<QVector>)> {
    rows([
        &[&[(1, 1, 2)]],
        &[&[(1, 1, 3)], &[(1, 3, 2)]],
        &[&[(1, 1, 5)], &[(1, 4, 2)]],
        &[&[(1, 1, 4)], &[(1, 5, 2)]],
        &[&[(1, 4, 5)]],
        &[&[(1, 3, 5)], &[(1, 4, 3)]],
        &[
            &[(1, 1, 1)],
            &[(1, 2, 2)],
            &[(1, 3, 3)],
            &[(1, 4, 4)],
            &[(1, 5, 5)],
        ],
        &[&[(1, 3, 4)], &[(1, 5, 3)]],
        &[&[(1, 5, 4)]],
        &[&[(1, 2, 5)], &[(1, 4, 1)]],
        &[&[(1, 2, 4)], &[(1, 5, 1)]],
        &[&[(1, 2, 3)], &[(1, 3, 1)]],
        &[&[(1, 2, 1)]],
    ])
}

/// Rows of the weight-space table of `Γ_{0,2}`.
pub fn table2() -> Vec<(Weight, Vec<QVector>)> {
    rows([
        &[&[(1, 1, 2)]],
        &[&[(1, 1, 3), (2, 3, 2)]],
        &[&[(1, 1, 5), (1, 4, 2)]],
        &[&[(1, 1, 4), (1, 5, 2)]],
        &[&[(1, 4, 5)]],
        &[&[(1, 4, 3), (2, 3, 5)]],
        &[
            &[(1, 1, 1), (1, 2, 2), (-1, 4, 4), (-1, 5, 5)],
            &[(2, 3, 3), (-1, 1, 1), (-1, 2, 2)],
        ],
        &[&[(2, 3, 4), (1, 5, 3)]],
        &[&[(1, 5, 4)]],
        &[&[(1, 2, 5), (1, 4, 1)]],
        &[&[(1, 2, 4), (1, 5, 1)]],
        &[&[(1, 2, 3), (2, 3, 1)]],
        &[&[(1, 2, 1)]],
    ])
}

#[cfg(test)]
mod tests {
    use super::super::{weight_of, END_DIM};
    use super::*;
    use crate::arith::RationalSpan;

    #[test]
    fn table1_vectors_have_row_weights() {
        for (w, vs) in table1() {
            for v in vs {
                assert_eq!(weight_of(&v), Some(w));
            }
        }
    }

    #[test]
    fn table1_spans_everything() {
        let all: Vec<QVector> = table1().into_iter().flat_map(|(_, v)| v).collect();
        assert_eq!(RationalSpan::from_vectors(END_DIM, &all).dim(), 25);
    }

    #[test]
    fn table2_has_fourteen_vectors() {
        let n: usize = table2().iter().map(|(_, v)| v.len()).sum();
        assert_eq!(n, 14);
    }
}
