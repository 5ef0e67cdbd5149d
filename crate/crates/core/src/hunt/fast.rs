//! Hot-loop checks on raw permutation tables.
//!
//! These deliberately share no code with the verifiers in `ybkernel`; the
//! two are compared exhaustively in tests.

/// Table entry `t[x*n + y] = p*n + q` encodes `R(x,y) = (p,q)`.
#[inline]
fn image(t: &[u8], n: usize, x: usize, y: usize) -> (usize, usize) {
    let v = t[x * n + y] as usize;
    (v / n, v % n)
}

/// `R(swap(R(x,y)))` must be `swap((x,y))` for every pair.
pub(crate) fn unitary(t: &[u8], n: usize) -> bool {
    let pairs = n * n;
    (0..pairs).all(|i| {
        let j = t[i] as usize;
        let swapped_j = (j % n) * n + j / n;
        let swapped_i = (i % n) * n + i / n;
        t[swapped_j] as usize == swapped_i
    })
}

pub(crate) fn braided(t: &[u8], n: usize) -> bool {
    for x in 0..n {
        for y in 0..n {
            let (p1, q1) = image(t, n, x, y);
            for z in 0..n {
                // right-hand side: R12, then R13, then R23
                let (r0, s) = image(t, n, p1, z);
                let (u, v) = image(t, n, q1, s);
                // left-hand side: R23, then R13, then R12
                let (a1, b1) = image(t, n, y, z);
                let (c0, c2) = image(t, n, x, b1);
                let (d0, d1) = image(t, n, c0, a1);
                if (d0, d1, c2) != (r0, u, v) {
                    return false;
                }
            }
        }
    }
    true
}

/// `(R21)^t R^t = 1` counted column by column: the column `(x,y)` of the
/// product collects, for each `v` with `R(x,v) = (u,y)` and each `q` with
/// `R(q,u) = (v,p)`, a unit at row `(p,q)`.
pub(crate) fn crossing_symmetric(t: &[u8], n: usize, scratch: &mut Vec<u32>) -> bool {
    scratch.clear();
    scratch.resize(n * n, 0);
    for x in 0..n {
        for y in 0..n {
            let mut touched = 0u32;
            for v in 0..n {
                let (u, w) = image(t, n, x, v);
                if w != y {
                    continue;
                }
                for q in 0..n {
                    let (r1, p) = image(t, n, q, u);
                    if r1 == v {
                        scratch[p * n + q] += 1;
                        touched += 1;
                    }
                }
            }
            let target = x * n + y;
            let ok = touched == 1 && scratch[target] == 1;
            scratch.iter_mut().for_each(|c| *c = 0);
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Rearranges `v` into the next permutation in lexicographic order;
/// `false` once `v` is the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
