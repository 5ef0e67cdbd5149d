//! Exact matrix arithmetic over `Z` and `Z/m`.

mod adjugate;
mod elimination;
mod group;
pub mod literal;
mod matrix;
mod ring;

use thiserror::Error;

pub use adjugate::characteristic_polynomial;
pub use group::GroupSpec;
pub use matrix::Matrix;
pub use ring::{is_prime, max_prime_exponent, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(Ring, Ring),
    #[error("matrix is not invertible: determinant {det} is not a unit in {ring}")]
    NotInvertible { det: i64, ring: Ring },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus must be at least 2 and fit in i64, got {0}")]
    InvalidModulus(u64),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("empty matrix or group")]
    Empty,
    #[error("invalid literal: {0}")]
    Literal(String),
    #[error("{0}")]
    Incompatible(String),
}
