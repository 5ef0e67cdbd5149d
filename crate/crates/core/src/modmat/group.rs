use serde::Serialize;

use super::{MatrixError, Ring};

/// The group `X = (Z/m)^N`. Elements are residue vectors, indexed in
/// lexicographic order with the first coordinate most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupSpec {
    #[serde(rename = "mod")]
    modulus: u64,
    rank: usize,
}

impl GroupSpec {
    pub fn new(modulus: u64, rank: usize) -> Result<GroupSpec, MatrixError> {
        Ring::zmod(modulus)?;
        if rank == 0 {
            return Err(MatrixError::Empty);
        }
        Ok(GroupSpec { modulus, rank })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ring(&self) -> Ring {
        Ring::Mod(self.modulus)
    }

    /// `|X| = m^N`, or `None` if it does not fit in a `usize`.
    pub fn order(&self) -> Option<usize> {
        let m = usize::try_from(self.modulus).ok()?;
        m.checked_pow(u32::try_from(self.rank).ok()?)
    }

    pub fn index_of(&self, v: &[i64]) -> usize {
        debug_assert_eq!(v.len(), self.rank);
        v.iter()
            .fold(0usize, |acc, &x| acc * self.modulus as usize + x as usize)
    }

    pub fn element(&self, mut idx: usize) -> Vec<i64> {
        let m = self.modulus as usize;
        let mut v = vec![0i64; self.rank];
        for slot in v.iter_mut().rev() {
            *slot = (idx % m) as i64;
            idx /= m;
        }
        v
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        (0..self.order().unwrap_or(0)).map(|i| self.element(i))
    }
}
