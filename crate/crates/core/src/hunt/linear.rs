use rayon::prelude::*;

use crate::canon::{solve_b_space, span};
use crate::modmat::{is_prime, GroupSpec, Matrix, Ring};
use crate::ybkernel::{check_eq13, complete_solution, LinearSolution};

use super::{HuntError, SearchConfig};

/// A pair `(a, b)` with `b` and `1 - a^2` invertible and `ab = ba + aba`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearPair {
    pub a: Matrix,
    pub b: Matrix,
}

impl LinearPair {
    pub fn complete(&self, group: GroupSpec) -> Result<LinearSolution, HuntError> {
        Ok(complete_solution(group, &self.a, &self.b)?)
    }
}

/// The `index`-th matrix in lexicographic order of entries.
fn nth_matrix(ring: Ring, m: u64, n: usize, mut index: u128) -> Matrix {
    let mut data = vec![0i64; n * n];
    for slot in data.iter_mut().rev() {
        *slot = (index % m as u128) as i64;
        index /= m as u128;
    }
    Matrix::from_flat(ring, n, n, data).expect("digits are residues")
}

fn one_minus_square_invertible(a: &Matrix) -> Result<bool, HuntError> {
    let sq = a.mul(a)?;
    Ok(sq.neg()?.shift_identity(1)?.is_invertible()?)
}

/// All solution pairs over `Mat_N(Z/m)`, sorted by the entries of `a` and
/// then of `b`. Over a prime field `b` ranges over the solution space of the
/// linear system in `b`; otherwise every `b` is tried.
pub fn enumerate_linear(m: u64, n: usize, cfg: &SearchConfig) -> Result<Vec<LinearPair>, HuntError> {
    let group = GroupSpec::new(m, n)?;
    let ring = group.ring();
    let prime = is_prime(m);
    let per_matrix = (m as u128)
        .checked_pow((n * n) as u32)
        .ok_or(HuntError::BudgetExceeded {
            needed: u128::MAX,
            budget: cfg.budget,
        })?;
    let needed = if prime {
        per_matrix
    } else {
        per_matrix.saturating_mul(per_matrix)
    };
    if needed > cfg.budget {
        return Err(HuntError::BudgetExceeded {
            needed,
            budget: cfg.budget,
        });
    }

    let for_a = |index: u128| -> Result<Vec<LinearPair>, HuntError> {
        let a = nth_matrix(ring, m, n, index);
        if !one_minus_square_invertible(&a)? {
            return Ok(Vec::new());
        }
        let mut found = Vec::new();
        if prime {
            let basis = solve_b_space(&a)?;
            let size = (m as u128).checked_pow(basis.len() as u32).unwrap_or(u128::MAX);
            if size > cfg.budget {
                return Err(HuntError::BudgetExceeded {
                    needed: size,
                    budget: cfg.budget,
                });
            }
            for b in span(&basis, ring, n)? {
                if b.is_invertible()? {
                    found.push(LinearPair { a: a.clone(), b });
                }
            }
            found.sort();
        } else {
            for j in 0..per_matrix {
                let b = nth_matrix(ring, m, n, j);
                if check_eq13(&a, &b)? && b.is_invertible()? {
                    found.push(LinearPair { a: a.clone(), b });
                }
            }
        }
        Ok(found)
    };

    let pool = cfg.pool()?;
    let chunks: Vec<Vec<LinearPair>> = pool.install(|| {
        (0..per_matrix as u64)
            .into_par_iter()
            .map(|i| for_a(i as u128))
            .collect::<Result<_, _>>()
    })?;
    Ok(chunks.into_iter().flatten().collect())
}
