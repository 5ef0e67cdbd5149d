//! Crossing symmetry in product form, `(R21)^t R^t = 1`, where `^t`
//! transposes the second tensor factor of the 0/1 matrix of `R`.
//!
//! Row `(p,q)`, column `(x,y)` of the matrix of `R` is 1 iff
//! `R(x,y) = (p,q)`. The partial transpose moves that entry to row `(p,y)`,
//! column `(x,q)`. Matrices are kept sparse: a permutation matrix on `X⊗X`
//! has only `|X|^2` nonzero entries out of `|X|^4`.

use std::collections::BTreeMap;

use super::{CheckOutcome, KernelError, PermutationMap, Witness};

/// Integer matrix on `X⊗X` stored by nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorMatrix {
    order: usize,
    entries: BTreeMap<(usize, usize), i64>,
}

impl TensorMatrix {
    /// `sum_{x,y} E_{f(x,y), x} ⊗ E_{g(x,y), y}` for `R = (f, g)`.
    pub fn of_permutation(r: &PermutationMap) -> TensorMatrix {
        let n = r.order();
        let entries = r
            .table()
            .iter()
            .enumerate()
            .map(|(col, &row)| ((row as usize, col), 1))
            .collect();
        TensorMatrix { order: n, entries }
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries.get(&(row, col)).copied().unwrap_or(0)
    }

    /// Transpose in the second tensor factor.
    pub fn partial_transpose(&self) -> TensorMatrix {
        let n = self.order;
        let entries = self
            .entries
            .iter()
            .map(|(&(row, col), &v)| {
                let (p, q) = (row / n, row % n);
                let (x, y) = (col / n, col % n);
                ((p * n + y, x * n + q), v)
            })
            .collect();
        TensorMatrix {
            order: n,
            entries,
        }
    }

    pub fn mul(&self, other: &TensorMatrix) -> TensorMatrix {
        let dim = self.order * self.order;
        let mut by_col: Vec<Vec<(usize, i64)>> = vec![Vec::new(); dim];
        for (&(row, col), &v) in &self.entries {
            by_col[col].push((row, v));
        }
        let mut entries = BTreeMap::new();
        for (&(k, col), &v) in &other.entries {
            for &(row, u) in &by_col[k] {
                *entries.entry((row, col)).or_insert(0) += u * v;
            }
        }
        entries.retain(|_, v| *v != 0);
        TensorMatrix {
            order: self.order,
            entries,
        }
    }

    /// First `(row, col)` in row-major order where the matrix differs from
    /// the identity, with the entry found there.
    pub fn first_deviation_from_identity(&self) -> Option<(usize, usize, i64)> {
        let dim = self.order * self.order;
        let mut diag = 0;
        for (&(row, col), &v) in &self.entries {
            // any missing diagonal entry strictly before this one is a zero
            if diag < dim && (diag, diag) < (row, col) {
                return Some((diag, diag, 0));
            }
            if row == col {
                if v != 1 {
                    return Some((row, col, v));
                }
                diag = row + 1;
            } else {
                return Some((row, col, v));
            }
        }
        (diag < dim).then_some((diag, diag, 0))
    }
}

fn crossing_product(r: &PermutationMap) -> TensorMatrix {
    let flip = PermutationMap::flip(r.order());
    let r21 = flip.compose(r).compose(&flip);
    let lhs = TensorMatrix::of_permutation(&r21).partial_transpose();
    let rhs = TensorMatrix::of_permutation(r).partial_transpose();
    lhs.mul(&rhs)
}

/// Crossing symmetry as the product identity `(R21)^t R^t = 1`. Only
/// meaningful for `R` that already satisfies the braid relation and
/// unitarity; that is not checked here.
pub fn verify_crossing_matrix(r: &PermutationMap, cap: usize) -> Result<CheckOutcome, KernelError> {
    let n = r.order();
    if n > cap {
        return Err(KernelError::GroupTooLarge { order: n, cap });
    }
    let prod = crossing_product(r);
    Ok(match prod.first_deviation_from_identity() {
        None => CheckOutcome::Pass,
        Some((row, col, value)) => CheckOutcome::fail(Witness::MatrixEntry {
            row: [r.label(row / n), r.label(row % n)],
            col: [r.label(col / n), r.label(col % n)],
            value,
            expected: i64::from(row == col),
        }),
    })
}

pub(crate) fn entry_deviates(
    r: &PermutationMap,
    row: &[Vec<i64>; 2],
    col: &[Vec<i64>; 2],
) -> Option<bool> {
    let n = r.order();
    let ri = r.index_of(&row[0])? * n + r.index_of(&row[1])?;
    let ci = r.index_of(&col[0])? * n + r.index_of(&col[1])?;
    Some(crossing_product(r).get(ri, ci) != i64::from(ri == ci))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ybkernel::permutation::DEFAULT_CAP;

    #[test]
    fn identity_passes() {
        for n in 1..5 {
            let out = verify_crossing_matrix(&PermutationMap::identity(n), DEFAULT_CAP).unwrap();
            assert!(out.is_pass(), "n={n}");
        }
    }

    #[test]
    fn flip_fails_with_real_witness() {
        let f = PermutationMap::flip(2);
        let out = verify_crossing_matrix(&f, DEFAULT_CAP).unwrap();
        let w = out.witness().expect("flip is not crossing-symmetric");
        assert!(crate::ybkernel::witness_is_violation(&f, w));
    }

    #[test]
    fn partial_transpose_is_involution() {
        let r = PermutationMap::from_table(2, None, vec![1, 2, 3, 0]).unwrap();
        let m = TensorMatrix::of_permutation(&r);
        assert_eq!(m.partial_transpose().partial_transpose(), m);
    }

    #[test]
    fn dense_product_agrees() {
        // compare the sparse product against a dense triple loop
        let r = PermutationMap::from_table(2, None, vec![1, 2, 3, 0]).unwrap();
        let flip = PermutationMap::flip(2);
        let r21 = flip.compose(&r).compose(&flip);
        let a = TensorMatrix::of_permutation(&r21).partial_transpose();
        let b = TensorMatrix::of_permutation(&r).partial_transpose();
        let c = a.mul(&b);
        for i in 0..4 {
            for j in 0..4 {
                let dense: i64 = (0..4).map(|k| a.get(i, k) * b.get(k, j)).sum();
                assert_eq!(c.get(i, j), dense);
            }
        }
    }

    #[test]
    fn deviation_scan() {
        let mut m = TensorMatrix {
            order: 2,
            entries: (0..4).map(|i| ((i, i), 1)).collect(),
        };
        assert_eq!(m.first_deviation_from_identity(), None);
        m.entries.remove(&(2, 2));
        assert_eq!(m.first_deviation_from_identity(), Some((2, 2, 0)));
        m.entries.insert((1, 3), 1);
        assert_eq!(m.first_deviation_from_identity(), Some((1, 3, 1)));
        m.entries.remove(&(0, 0));
        assert_eq!(m.first_deviation_from_identity(), Some((0, 0, 0)));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            verify_crossing_matrix(&PermutationMap::identity(5), 4),
            Err(KernelError::GroupTooLarge { .. })
        ));
    }
}
