use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::ybkernel::{CheckSet, PermutationMap};

use super::fast::{braided, crossing_symmetric, next_permutation, unitary};
use super::{HuntError, SearchConfig};

/// Permutation solutions on an `n`-element set, raw and up to simultaneous
/// relabeling of the set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCensus {
    pub n: usize,
    pub checks: CheckSet,
    /// Every passing permutation, in lexicographic order of tables.
    pub raw: Vec<PermutationMap>,
    /// Canonical representatives, sorted.
    pub canonical: Vec<PermutationMap>,
}

impl SetCensus {
    /// Index into [`SetCensus::canonical`] of the class of `raw[i]`.
    pub fn class_of(&self, i: usize) -> usize {
        let rep = canonical_relabeling(&self.raw[i]);
        self.canonical
            .binary_search(&rep)
            .expect("every raw solution has its class listed")
    }
}

fn passes(t: &[u8], n: usize, checks: CheckSet, scratch: &mut Vec<u32>) -> bool {
    (!checks.unitarity || unitary(t, n))
        && (!checks.qybe || braided(t, n))
        && (!checks.crossing || crossing_symmetric(t, n, scratch))
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Walks the permutations of `X×X` whose one-line notation starts with
/// `prefix`, in lexicographic order.
fn walk_prefix(prefix: &[u8], pairs: usize, n: usize, checks: CheckSet) -> Vec<Vec<u8>> {
    let mut table: Vec<u8> = prefix.to_vec();
    table.extend((0..pairs as u8).filter(|v| !prefix.contains(v)));
    let fixed = prefix.len();
    let mut scratch = Vec::new();
    let mut out = Vec::new();
    loop {
        if passes(&table, n, checks, &mut scratch) {
            out.push(table.clone());
        }
        if !next_permutation(&mut table[fixed..]) {
            return out;
        }
    }
}

fn prefixes(pairs: usize) -> Vec<Vec<u8>> {
    if pairs < 2 {
        return vec![Vec::new()];
    }
    let pairs = pairs as u8;
    (0..pairs)
        .flat_map(|i| (0..pairs).filter(move |&j| j != i).map(move |j| vec![i, j]))
        .collect()
}

/// The least table among all conjugates `s R (s^-1 × s^-1)` by
/// permutations `s` of the set.
pub fn canonical_relabeling(r: &PermutationMap) -> PermutationMap {
    let n = r.order();
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u32>> = None;
    let mut table = vec![0u32; n * n];
    loop {
        for x in 0..n {
            for y in 0..n {
                let (p, q) = r.apply(x, y);
                table[sigma[x] * n + sigma[y]] = (sigma[p] * n + sigma[q]) as u32;
            }
        }
        if best.as_ref().is_none_or(|b| table < *b) {
            best = Some(table.clone());
        }
        if !next_permutation(&mut sigma) {
            break;
        }
    }
    PermutationMap::from_table(n, None, best.expect("at least one relabeling"))
        .expect("conjugate of a bijection")
}

/// Every permutation of `X×X`, `|X| = n`, passing `cfg.checks`. Within a
/// candidate unitarity is tested before the braid relation, and crossing
/// last.
pub fn enumerate_set_theoretic(n: usize, cfg: &SearchConfig) -> Result<SetCensus, HuntError> {
    let pairs = n.saturating_mul(n);
    let candidates = factorial(pairs);
    if n == 0 || pairs > cfg.max_pairs || pairs > 256 || candidates > cfg.max_permutations as f64 {
        return Err(HuntError::CapExceeded {
            n,
            pairs,
            cap: cfg.max_pairs,
            candidates,
        });
    }
    let checks = cfg.checks;
    let pool = cfg.pool()?;
    let tables: Vec<Vec<Vec<u8>>> = pool.install(|| {
        prefixes(pairs)
            .par_iter()
            .map(|p| walk_prefix(p, pairs, n, checks))
            .collect()
    });
    let raw: Vec<PermutationMap> = tables
        .into_iter()
        .flatten()
        .map(|t| PermutationMap::from_table(n, None, t.into_iter().map(u32::from).collect()))
        .collect::<Result<_, _>>()?;
    let canonical: BTreeSet<PermutationMap> = raw.iter().map(canonical_relabeling).collect();
    Ok(SetCensus {
        n,
        checks,
        raw,
        canonical: canonical.into_iter().collect(),
    })
}
