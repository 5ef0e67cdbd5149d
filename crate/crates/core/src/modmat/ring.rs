use std::fmt;

use super::MatrixError;

/// Coefficient ring for exact matrix arithmetic.
///
/// Elements are stored as `i64`. Over `Mod(m)` they are always the least
/// non-negative residue; over the integers every operation is checked and
/// overflow surfaces as [`MatrixError::Overflow`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integers,
    Mod(u64),
}

impl Ring {
    /// `Z/m` for `m >= 2`.
    pub fn zmod(m: u64) -> Result<Ring, MatrixError> {
        if m < 2 || m > i64::MAX as u64 {
            return Err(MatrixError::InvalidModulus(m));
        }
        Ok(Ring::Mod(m))
    }

    pub fn modulus(&self) -> Option<u64> {
        match *self {
            Ring::Integers => None,
            Ring::Mod(m) => Some(m),
        }
    }

    pub(crate) fn validate(&self) -> Result<(), MatrixError> {
        match *self {
            Ring::Integers => Ok(()),
            Ring::Mod(m) => Ring::zmod(m).map(|_| ()),
        }
    }

    /// Brings a wide intermediate value back into canonical storage form.
    pub(crate) fn reduce(&self, v: i128) -> Result<i64, MatrixError> {
        match *self {
            Ring::Integers => i64::try_from(v).map_err(|_| MatrixError::Overflow),
            Ring::Mod(m) => Ok(v.rem_euclid(m as i128) as i64),
        }
    }

    /// Canonical representative of an arbitrary integer literal.
    pub fn canonical(&self, v: i64) -> i64 {
        match *self {
            Ring::Integers => v,
            Ring::Mod(m) => (v as i128).rem_euclid(m as i128) as i64,
        }
    }

    pub(crate) fn add_wide(&self, a: i128, b: i128) -> Result<i128, MatrixError> {
        match *self {
            Ring::Integers => a.checked_add(b).ok_or(MatrixError::Overflow),
            Ring::Mod(m) => Ok((a + b).rem_euclid(m as i128)),
        }
    }

    pub(crate) fn mul_wide(&self, a: i128, b: i128) -> Result<i128, MatrixError> {
        match *self {
            Ring::Integers => a.checked_mul(b).ok_or(MatrixError::Overflow),
            // operands are residues below 2^63, so the product fits
            Ring::Mod(m) => Ok((a * b).rem_euclid(m as i128)),
        }
    }

    pub(crate) fn neg_wide(&self, a: i128) -> Result<i128, MatrixError> {
        match *self {
            Ring::Integers => a.checked_neg().ok_or(MatrixError::Overflow),
            Ring::Mod(m) => Ok((-a).rem_euclid(m as i128)),
        }
    }

    pub fn add(&self, a: i64, b: i64) -> Result<i64, MatrixError> {
        self.reduce(self.add_wide(a as i128, b as i128)?)
    }

    pub fn sub(&self, a: i64, b: i64) -> Result<i64, MatrixError> {
        let nb = self.neg_wide(b as i128)?;
        self.reduce(self.add_wide(a as i128, nb)?)
    }

    pub fn mul(&self, a: i64, b: i64) -> Result<i64, MatrixError> {
        self.reduce(self.mul_wide(a as i128, b as i128)?)
    }

    pub fn neg(&self, a: i64) -> Result<i64, MatrixError> {
        self.reduce(self.neg_wide(a as i128)?)
    }

    /// Units are ±1 over the integers and residues coprime to `m` otherwise.
    pub fn is_unit(&self, v: i64) -> bool {
        self.unit_inverse(v).is_some()
    }

    pub fn unit_inverse(&self, v: i64) -> Option<i64> {
        match *self {
            Ring::Integers => match v {
                1 => Some(1),
                -1 => Some(-1),
                _ => None,
            },
            Ring::Mod(m) => {
                let (g, x, _) = ext_gcd(self.canonical(v) as i128, m as i128);
                (g == 1).then(|| x.rem_euclid(m as i128) as i64)
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Mod(m) => write!(f, "Z/{m}"),
        }
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest exponent `e` with `q^e | m` over the prime factors `q` of `m`.
pub fn max_prime_exponent(mut m: u64) -> u32 {
    let mut best = 0;
    let mut q = 2u64;
    while q.saturating_mul(q) <= m {
        let mut e = 0;
        while m.is_multiple_of(q) {
            m /= q;
            e += 1;
        }
        best = best.max(e);
        q += 1;
    }
    if m > 1 {
        best = best.max(1);
    }
    best
}
