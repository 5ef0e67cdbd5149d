//! Canonical solutions built from shift and binomial blocks, and
//! classification of the `a` factor by nilpotency and Jordan type.

use serde::Serialize;
use thiserror::Error;

use crate::modmat::{is_prime, max_prime_exponent, Matrix, MatrixError, Ring};
use crate::ybkernel::check_eq13;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("A is not invertible")]
    NotInvertible,
    #[error("A does not commute with a: [A, a] = {0}")]
    CommutantViolation(Matrix),
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Block sizes of a nilpotent Jordan form, non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct JordanType(Vec<usize>);

impl JordanType {
    /// Sorts the parts into non-increasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<JordanType, CanonError> {
        if parts.is_empty() {
            return Err(CanonError::Partition("no blocks".into()));
        }
        if parts.contains(&0) {
            return Err(CanonError::Partition("block of size 0".into()));
        }
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Ok(JordanType(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `N`, the sum of the block sizes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All partitions of `n`, each non-increasing, in decreasing
    /// lexicographic order.
    pub fn all(n: usize) -> Vec<JordanType> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<JordanType>) {
            if rest == 0 {
                out.push(JordanType(cur.clone()));
                return;
            }
            for k in (1..=rest.min(max)).rev() {
                cur.push(k);
                go(rest - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

/// `J_N`: ones on the superdiagonal.
pub fn shift_matrix(n: usize, ring: Ring) -> Result<Matrix, MatrixError> {
    Matrix::from_fn(ring, n, |i, j| i64::from(j == i + 1))
}

/// `B_N[i][j] = C(j, i)` with 0-based indices; upper unitriangular.
pub fn binomial_matrix(n: usize, ring: Ring) -> Result<Matrix, MatrixError> {
    // Pascal's rule row by row keeps everything exact (and reduced mod m)
    let mut rows = vec![vec![0i64; n]; n];
    rows[0].fill(1);
    for i in 1..n {
        for j in i..n {
            rows[i][j] = ring.add(rows[i - 1][j - 1], rows[i][j - 1])?;
        }
    }
    Matrix::from_rows(ring, rows)
}

/// `(⊕ J_{N_l}, ⊕ B_{N_l})`.
pub fn canonical_pair(ty: &JordanType, ring: Ring) -> Result<(Matrix, Matrix), MatrixError> {
    let js = ty
        .parts()
        .iter()
        .map(|&k| shift_matrix(k, ring))
        .collect::<Result<Vec<_>, _>>()?;
    let bs = ty
        .parts()
        .iter()
        .map(|&k| binomial_matrix(k, ring))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((Matrix::block_diag(ring, &js)?, Matrix::block_diag(ring, &bs)?))
}

/// `(a, b0·A)` for an invertible `A` commuting with `a = ⊕ J_{N_l}`. The
/// ring is taken from `A`.
pub fn canonical_solution(ty: &JordanType, commutant: &Matrix) -> Result<(Matrix, Matrix), CanonError> {
    let (a, b0) = canonical_pair(ty, commutant.ring())?;
    if (commutant.rows(), commutant.cols()) != (a.rows(), a.cols()) {
        return Err(MatrixError::ShapeMismatch {
            left: (a.rows(), a.cols()),
            right: (commutant.rows(), commutant.cols()),
        }
        .into());
    }
    if !commutant.is_invertible()? {
        return Err(CanonError::NotInvertible);
    }
    let comm = commutant.commutator(&a)?;
    if !comm.is_zero() {
        return Err(CanonError::CommutantViolation(comm));
    }
    let b = b0.mul(commutant)?;
    debug_assert!(check_eq13(&a, &b).unwrap_or(false));
    Ok((a, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Nilpotency {
    Index(usize),
    NotNilpotent,
}

/// Least `k` with `a^k = 0`.
///
/// Powers are tried up to `N` over `Z` and `Z/p`; over `Z/m` with
/// `m = prod p_i^{e_i}` the bound is `N·max e_i`, since a nilpotent matrix
/// mod `p^e` has `a^{Ne} = 0`. Reaching the bound with `a^k != 0` certifies
/// that `a` is not nilpotent.
pub fn nilpotency_index(a: &Matrix) -> Result<Nilpotency, MatrixError> {
    let n = a.require_square()?;
    let bound = match a.ring() {
        Ring::Integers => n,
        Ring::Mod(m) => n * max_prime_exponent(m) as usize,
    };
    let mut power = a.clone();
    for k in 1..=bound {
        if power.is_zero() {
            return Ok(Nilpotency::Index(k));
        }
        if k < bound {
            power = power.mul(a)?;
        }
    }
    Ok(Nilpotency::NotNilpotent)
}

/// Jordan type of a nilpotent matrix over the field `Z/p`.
pub fn jordan_type(a: &Matrix) -> Result<JordanType, CanonError> {
    match a.ring() {
        Ring::Mod(p) if is_prime(p) => jordan_type_mod(a, p),
        Ring::Mod(m) => Err(CanonError::NotPrime(m)),
        Ring::Integers => Err(CanonError::Partition(
            "Jordan type needs a prime modulus; use jordan_type_mod".into(),
        )),
    }
}

/// Jordan type of `a mod p`, read off the rank sequence `r_k = rank(a^k)`:
/// there are `r_{k-1} - r_k` blocks of size at least `k`.
pub fn jordan_type_mod(a: &Matrix, p: u64) -> Result<JordanType, CanonError> {
    if !is_prime(p) {
        return Err(CanonError::NotPrime(p));
    }
    let n = a.require_square()?;
    let a = a.reduce_mod(p)?;
    let mut ranks = vec![n];
    let mut power = a.clone();
    while *ranks.last().expect("non-empty") > 0 {
        if ranks.len() > n {
            return Err(CanonError::NotNilpotent);
        }
        ranks.push(power.rank_mod_p(p)?);
        power = power.mul(&a)?;
    }
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for (k, &count) in at_least.iter().enumerate() {
        let exactly = count - at_least.get(k + 1).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(k + 1, exactly));
    }
    JordanType::new(parts)
}

/// Basis over `Z/p` of the solution space `{b : ab = ba + aba}`, which is
/// linear in `b`. Basis elements come from the reduced echelon form of the
/// `N^2 x N^2` system, so the output is deterministic.
pub fn solve_b_space(a: &Matrix) -> Result<Vec<Matrix>, CanonError> {
    let p = match a.ring() {
        Ring::Mod(p) if is_prime(p) => p,
        Ring::Mod(m) => return Err(CanonError::NotPrime(m)),
        Ring::Integers => {
            return Err(CanonError::Partition("solve_b_space needs Z/p".into()))
        }
    };
    let n = a.require_square()?;
    let ring = a.ring();
    let dim = n * n;
    let mut system = vec![0i64; dim * dim];
    for col in 0..dim {
        let mut unit = vec![0i64; dim];
        unit[col] = 1;
        let e = Matrix::from_flat(ring, n, n, unit)?;
        let ea = e.mul(a)?;
        let image = a.mul(&e)?.sub(&ea)?.sub(&a.mul(&ea)?)?;
        for (row, &v) in image.entries().iter().enumerate() {
            system[row * dim + col] = v;
        }
    }
    let system = Matrix::from_flat(ring, dim, dim, system)?;
    system
        .nullspace_mod_p(p)?
        .into_iter()
        .map(|v| Matrix::from_flat(ring, n, n, v).map_err(CanonError::from))
        .collect()
}

/// Every `Z/p`-linear combination of `basis`, coefficients enumerated
/// lexicographically. `p^len` items; the zero matrix of size `n` is the only
/// item for an empty basis.
pub fn span(basis: &[Matrix], ring: Ring, n: usize) -> Result<Vec<Matrix>, MatrixError> {
    let p = ring.modulus().ok_or(MatrixError::Incompatible("span needs Z/p".into()))? as i64;
    let k = basis.len();
    let total = (p as u128).checked_pow(k as u32).ok_or(MatrixError::Overflow)?;
    let mut out = Vec::with_capacity(total.min(1 << 20) as usize);
    let mut coeffs = vec![0i64; k];
    loop {
        let mut acc = vec![0i64; n * n];
        for (c, b) in coeffs.iter().zip(basis) {
            if *c != 0 {
                for (slot, &v) in acc.iter_mut().zip(b.entries()) {
                    *slot = ring.add(*slot, ring.mul(*c, v)?)?;
                }
            }
        }
        out.push(Matrix::from_flat(ring, n, n, acc)?);
        // odometer, last coefficient fastest
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
        }
    }
}

/// Comparison of a solution `(a, b)` with the canonical form of its type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalComparison {
    pub jordan_type: JordanType,
    pub canonical_a: Vec<Vec<i64>>,
    pub canonical_b0: Vec<Vec<i64>>,
    /// `a` is literally `⊕ J_{N_l}`.
    pub a_is_canonical: bool,
    /// `A = b0^{-1} b` when `a` is canonical.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutant_factor: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor_commutes: Option<bool>,
}

pub fn compare_with_canonical(a: &Matrix, b: &Matrix) -> Result<CanonicalComparison, CanonError> {
    let ty = jordan_type(a)?;
    let (ca, cb0) = canonical_pair(&ty, a.ring())?;
    let a_is_canonical = &ca == a;
    let (factor, commutes) = if a_is_canonical {
        let factor = cb0.invert()?.mul(b)?;
        let commutes = factor.commutator(a)?.is_zero();
        (Some(factor.to_rows()), Some(commutes))
    } else {
        (None, None)
    };
    Ok(CanonicalComparison {
        jordan_type: ty,
        canonical_a: ca.to_rows(),
        canonical_b0: cb0.to_rows(),
        a_is_canonical,
        commutant_factor: factor,
        factor_commutes: commutes,
    })
}

/// Outcome of testing whether an integer nilpotent matrix can be brought
/// to Jordan form over `Z`. Conjugacy in `GL_N(Z)` is preserved by every
/// reduction mod `p`, and `⊕ J_{N_l}` has the same type mod every prime,
/// so differing types across primes rule out any integral Jordan form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralJordanProbe {
    pub nilpotency: Nilpotency,
    pub types_mod_p: Vec<(u64, JordanType)>,
    /// `Some(false)` is a proof of non-conjugacy; `Some(true)` means no
    /// obstruction was found at the tested primes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consistent: Option<bool>,
}

pub fn probe_integral_jordan_form(a: &Matrix) -> Result<IntegralJordanProbe, CanonError> {
    if a.ring() != Ring::Integers {
        return Err(CanonError::Partition("probe needs an integer matrix".into()));
    }
    let nilpotency = nilpotency_index(a)?;
    if nilpotency == Nilpotency::NotNilpotent {
        return Ok(IntegralJordanProbe {
            nilpotency,
            types_mod_p: Vec::new(),
            consistent: None,
        });
    }
    let largest = a.entries().iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
    let limit = largest.clamp(13, 1000);
    let mut types = Vec::new();
    for p in (2..=limit).filter(|&p| is_prime(p)) {
        types.push((p, jordan_type_mod(a, p)?));
    }
    let consistent = types.windows(2).all(|w| w[0].1 == w[1].1);
    Ok(IntegralJordanProbe {
        nilpotency,
        types_mod_p: types,
        consistent: Some(consistent),
    })
}
