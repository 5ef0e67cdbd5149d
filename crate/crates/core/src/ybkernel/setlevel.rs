use rayon::prelude::*;

use super::{CheckOutcome, PermutationMap, Witness};

type Triple = (usize, usize, usize);

fn braid_sides(r: &PermutationMap, x: usize, y: usize, z: usize) -> (Triple, Triple) {
    // R12 R13 R23: R23 acts first
    let (u1, v1) = r.apply(y, z);
    let (p, q) = r.apply(x, v1);
    let (l0, l1) = r.apply(p, u1);
    let lhs = (l0, l1, q);
    // R23 R13 R12
    let (p, q) = r.apply(x, y);
    let (r0, s) = r.apply(p, z);
    let (u, v) = r.apply(q, s);
    let rhs = (r0, u, v);
    (lhs, rhs)
}

/// Evaluates both sides of `R12 R13 R23 = R23 R13 R12` on every triple of
/// `X^3`. The witness is the lexicographically first violating triple,
/// whatever the thread count.
pub fn verify_qybe_set(r: &PermutationMap) -> CheckOutcome {
    let n = r.order();
    let first = (0..n).into_par_iter().find_map_first(|x| {
        (0..n)
            .flat_map(|y| (0..n).map(move |z| (y, z)))
            .find_map(|(y, z)| {
                let (lhs, rhs) = braid_sides(r, x, y, z);
                (lhs != rhs).then_some((x, y, z, lhs, rhs))
            })
    });
    match first {
        None => CheckOutcome::Pass,
        Some((x, y, z, lhs, rhs)) => {
            let lab = |t: Triple| [r.label(t.0), r.label(t.1), r.label(t.2)];
            CheckOutcome::fail(Witness::Triple {
                x: r.label(x),
                y: r.label(y),
                z: r.label(z),
                lhs: lab(lhs),
                rhs: lab(rhs),
            })
        }
    }
}

/// `R21 R = 1` with `R21 = P R P`.
pub fn verify_unitarity_set(r: &PermutationMap) -> CheckOutcome {
    let n = r.order();
    for x in 0..n {
        for y in 0..n {
            let (u, v) = r.apply(x, y);
            let (p, q) = r.apply(v, u);
            if (q, p) != (x, y) {
                return CheckOutcome::fail(Witness::Pair {
                    x: r.label(x),
                    y: r.label(y),
                    image: [r.label(q), r.label(p)],
                });
            }
        }
    }
    CheckOutcome::Pass
}

/// Re-evaluates a witness against `r`; `true` means it really is a
/// violation.
pub fn witness_is_violation(r: &PermutationMap, w: &Witness) -> bool {
    let idx = |l: &Vec<i64>| r.index_of(l);
    match w {
        Witness::Triple { x, y, z, .. } => match (idx(x), idx(y), idx(z)) {
            (Some(x), Some(y), Some(z)) => {
                let (lhs, rhs) = braid_sides(r, x, y, z);
                lhs != rhs
            }
            _ => false,
        },
        Witness::Pair { x, y, .. } => match (idx(x), idx(y)) {
            (Some(x), Some(y)) => {
                let (u, v) = r.apply(x, y);
                let (p, q) = r.apply(v, u);
                (q, p) != (x, y)
            }
            _ => false,
        },
        Witness::MatrixEntry { row, col, .. } => {
            super::crossing::entry_deviates(r, row, col).unwrap_or(false)
        }
        Witness::Identity { .. } | Witness::Condition { .. } => false,
    }
}
