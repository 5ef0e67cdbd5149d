use std::collections::BTreeSet;

use crate::modmat::GroupSpec;
use crate::ybkernel::{complete_affine, CheckSet, PermutationMap, DEFAULT_CAP};

use super::{enumerate_linear, enumerate_set_theoretic, HuntError, SearchConfig};

/// How the linear and affine solutions over `(Z/m)^N` sit inside the
/// permutation census of the underlying set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossReport {
    pub group: GroupSpec,
    pub linear_count: usize,
    /// Distinct maps `R(x,y) = (cx+dy+t, ax+by+z)` over all linear pairs and
    /// translations `z`.
    pub affine_count: usize,
    pub census_raw: usize,
    pub census_canonical: usize,
    /// Linear solutions absent from the census. Empty when inclusion holds.
    pub missing: Vec<PermutationMap>,
    pub affine_missing: Vec<PermutationMap>,
    /// Census entries that are affine but not linear.
    pub residue_affine: Vec<PermutationMap>,
    /// Census entries that are not affine at all.
    pub residue_other: Vec<PermutationMap>,
}

impl CrossReport {
    pub fn inclusion_holds(&self) -> bool {
        self.missing.is_empty()
    }

    pub fn affine_inclusion_holds(&self) -> bool {
        self.affine_missing.is_empty()
    }
}

/// Compares the completed linear (and affine) solutions of rank `n` over
/// `Z/m` with the exhaustive permutation census of `(Z/m)^n` under all three
/// checks.
pub fn cross_validate(m: u64, n: usize, cfg: &SearchConfig) -> Result<CrossReport, HuntError> {
    let group = GroupSpec::new(m, n)?;
    let order = group.order().unwrap_or(usize::MAX);
    let census = enumerate_set_theoretic(order, &cfg.with_checks(CheckSet::ALL))?;
    let pairs = enumerate_linear(m, n, cfg)?;

    let mut linear = BTreeSet::new();
    let mut affine = BTreeSet::new();
    for p in &pairs {
        linear.insert(p.complete(group)?.to_permutation(DEFAULT_CAP)?.table().to_vec());
        for z in group.elements() {
            let s = complete_affine(group, &p.a, &p.b, &z)?;
            affine.insert(s.to_permutation(DEFAULT_CAP)?.table().to_vec());
        }
    }
    let found: BTreeSet<Vec<u32>> = census.raw.iter().map(|r| r.table().to_vec()).collect();
    let labelled = |t: &Vec<u32>| -> Result<PermutationMap, HuntError> {
        Ok(PermutationMap::from_table(order, Some(group), t.clone())?)
    };
    let collect = |it: &mut dyn Iterator<Item = &Vec<u32>>| -> Result<Vec<PermutationMap>, HuntError> {
        it.map(labelled).collect()
    };

    Ok(CrossReport {
        group,
        linear_count: linear.len(),
        affine_count: affine.len(),
        census_raw: census.raw.len(),
        census_canonical: census.canonical.len(),
        missing: collect(&mut linear.difference(&found))?,
        affine_missing: collect(&mut affine.difference(&found))?,
        residue_affine: collect(&mut found.iter().filter(|t| !linear.contains(*t) && affine.contains(*t)))?,
        residue_other: collect(&mut found.iter().filter(|t| !affine.contains(*t)))?,
    })
}
