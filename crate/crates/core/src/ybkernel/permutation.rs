use crate::modmat::GroupSpec;

use super::{AffineSolution, KernelError, LinearSolution};

/// Largest `|X|` for which explicit tables are built by default.
pub const DEFAULT_CAP: usize = 4096;

/// An explicit bijection of `X×X`. Pair `(x, y)` has index `x·|X| + y`, so
/// table order is lexicographic order on pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationMap {
    order: usize,
    group: Option<GroupSpec>,
    table: Vec<u32>,
}

impl PermutationMap {
    /// `group`, when given, only affects how elements are labelled and must
    /// have `order` elements.
    pub fn from_table(
        order: usize,
        group: Option<GroupSpec>,
        table: Vec<u32>,
    ) -> Result<PermutationMap, KernelError> {
        if order == 0 {
            return Err(KernelError::Shape("empty set".into()));
        }
        if let Some(g) = group {
            if g.order() != Some(order) {
                return Err(KernelError::Shape(format!(
                    "group of order {:?} labels a set of size {order}",
                    g.order()
                )));
            }
        }
        let pairs = order
            .checked_mul(order)
            .filter(|&p| p <= u32::MAX as usize)
            .ok_or(KernelError::GroupTooLarge { order, cap: 65535 })?;
        if table.len() != pairs {
            return Err(KernelError::Shape(format!(
                "table has {} entries, expected {pairs}",
                table.len()
            )));
        }
        let mut seen = vec![false; pairs];
        for &img in &table {
            let slot = seen
                .get_mut(img as usize)
                .ok_or(KernelError::NotBijective)?;
            if *slot {
                return Err(KernelError::NotBijective);
            }
            *slot = true;
        }
        Ok(PermutationMap {
            order,
            group,
            table,
        })
    }

    pub fn identity(order: usize) -> PermutationMap {
        let table = (0..(order * order) as u32).collect();
        PermutationMap {
            order,
            group: None,
            table,
        }
    }

    pub fn flip(order: usize) -> PermutationMap {
        let table = (0..order * order)
            .map(|p| ((p % order) * order + p / order) as u32)
            .collect();
        PermutationMap {
            order,
            group: None,
            table,
        }
    }

    pub fn with_group(mut self, group: GroupSpec) -> Result<PermutationMap, KernelError> {
        if group.order() != Some(self.order) {
            return Err(KernelError::Shape("group order does not match".into()));
        }
        self.group = Some(group);
        Ok(self)
    }

    /// `|X|`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn group(&self) -> Option<GroupSpec> {
        self.group
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        let img = self.table[x * self.order + y] as usize;
        (img / self.order, img % self.order)
    }

    /// Residue-vector label of element `i` (a 1-vector `[i]` for a bare set).
    pub fn label(&self, i: usize) -> Vec<i64> {
        match self.group {
            Some(g) => g.element(i),
            None => vec![i as i64],
        }
    }

    pub fn index_of(&self, label: &[i64]) -> Option<usize> {
        let idx = match self.group {
            Some(g) => {
                let m = g.modulus() as i64;
                if label.len() != g.rank() || label.iter().any(|&v| v < 0 || v >= m) {
                    return None;
                }
                g.index_of(label)
            }
            None => match label {
                [v] if *v >= 0 => *v as usize,
                _ => return None,
            },
        };
        (idx < self.order).then_some(idx)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PermutationMap) -> PermutationMap {
        assert_eq!(self.order, other.order);
        let table = other
            .table
            .iter()
            .map(|&p| self.table[p as usize])
            .collect();
        PermutationMap {
            order: self.order,
            group: self.group,
            table,
        }
    }

    pub fn inverse(&self) -> PermutationMap {
        let mut table = vec![0u32; self.table.len()];
        for (p, &img) in self.table.iter().enumerate() {
            table[img as usize] = p as u32;
        }
        PermutationMap {
            order: self.order,
            group: self.group,
            table,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(p, &img)| p == img as usize)
    }
}

/// Images of every pair under an affine map, as element indices.
pub(crate) struct VectorTables {
    order: usize,
    first: Vec<u32>,
    second: Vec<u32>,
}

impl VectorTables {
    pub(crate) fn new(s: &AffineSolution, cap: usize) -> Result<VectorTables, KernelError> {
        let g = s.group();
        let order = g
            .order()
            .filter(|&n| n <= cap)
            .ok_or(KernelError::GroupTooLarge {
                order: g.order().unwrap_or(usize::MAX),
                cap,
            })?;
        let ring = g.ring();
        let l = &s.linear;
        let elems: Vec<Vec<i64>> = g.elements().collect();
        let images = |m: &crate::modmat::Matrix| -> Result<Vec<Vec<i64>>, KernelError> {
            elems
                .iter()
                .map(|v| m.mul_vec(v).map_err(KernelError::from))
                .collect()
        };
        let (ax, by, cx, dy) = (images(&l.a)?, images(&l.b)?, images(&l.c)?, images(&l.d)?);
        let m = g.modulus() as i64;
        let combine = |u: &[i64], v: &[i64], w: &[i64]| -> u32 {
            let mut idx = 0usize;
            for k in 0..u.len() {
                // residues < m, so the sum stays small
                let s = (u[k] + v[k] + w[k]) % m;
                idx = idx * m as usize + s as usize;
            }
            idx as u32
        };
        debug_assert!(ring.modulus().is_some());
        let mut first = Vec::with_capacity(order * order);
        let mut second = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                first.push(combine(&cx[x], &dy[y], &s.t));
                second.push(combine(&ax[x], &by[y], &s.z));
            }
        }
        Ok(VectorTables {
            order,
            first,
            second,
        })
    }

    pub(crate) fn order(&self) -> usize {
        self.order
    }

    pub(crate) fn first(&self, x: usize, y: usize) -> usize {
        self.first[x * self.order + y] as usize
    }

    pub(crate) fn second(&self, x: usize, y: usize) -> usize {
        self.second[x * self.order + y] as usize
    }
}

/// Tabulates `R(x,y) = (cx+dy+t, ax+by+z)` pointwise.
pub fn to_permutation(s: &AffineSolution, cap: usize) -> Result<PermutationMap, KernelError> {
    let t = VectorTables::new(s, cap)?;
    let n = t.order;
    let table = t
        .first
        .iter()
        .zip(&t.second)
        .map(|(&p, &q)| (p as usize * n + q as usize) as u32)
        .collect();
    PermutationMap::from_table(n, Some(s.group()), table)
}

impl LinearSolution {
    pub fn to_permutation(&self, cap: usize) -> Result<PermutationMap, KernelError> {
        to_permutation(&self.clone().into_affine(), cap)
    }
}

impl AffineSolution {
    pub fn to_permutation(&self, cap: usize) -> Result<PermutationMap, KernelError> {
        to_permutation(self, cap)
    }
}
