//! Exhaustive searches: every pair `(a, b)` over `Mat_N(Z/m)`, and every
//! permutation solution on a set of at most three elements.

mod census;
mod cross;
mod fast;
mod linear;
pub mod output;

use thiserror::Error;

use crate::canon::CanonError;
use crate::modmat::MatrixError;
use crate::ybkernel::{CheckSet, KernelError};

pub use census::{canonical_relabeling, enumerate_set_theoretic, SetCensus};
pub use cross::{cross_validate, CrossReport};
pub use linear::{enumerate_linear, LinearPair};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HuntError {
    #[error("search needs about {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("|X| = {n} gives |X×X| = {pairs} > {cap}; about {candidates:.3e} permutations")]
    CapExceeded {
        n: usize,
        pairs: usize,
        cap: usize,
        candidates: f64,
    },
    #[error("worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Search limits and parallelism. `workers == 0` lets the pool pick.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub checks: CheckSet,
    /// Largest `|X×X|` for the permutation search.
    pub max_pairs: usize,
    /// Largest number of permutations of `X×X` to walk.
    pub max_permutations: u128,
    /// Largest number of matrix candidates for the linear search.
    pub budget: u128,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            checks: CheckSet::ALL,
            max_pairs: 9,
            max_permutations: 362_880,
            budget: 100_000_000,
            workers: 0,
        }
    }
}

impl SearchConfig {
    pub fn with_checks(mut self, checks: CheckSet) -> SearchConfig {
        self.checks = checks;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> SearchConfig {
        self.workers = workers;
        self
    }

    pub(crate) fn pool(&self) -> Result<rayon::ThreadPool, HuntError> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| HuntError::Pool(e.to_string()))
    }
}
