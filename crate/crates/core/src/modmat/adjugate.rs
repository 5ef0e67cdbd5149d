//! Division-free determinant, adjugate and inverse.
//!
//! The characteristic polynomial is computed with Berkowitz's algorithm,
//! which only needs ring operations, so the same code serves `Z` and every
//! `Z/m` including composite moduli. The adjugate then follows from
//! Cayley-Hamilton: if `det(tI - M) = t^n + c_{n-1} t^{n-1} + ... + c_0` then
//! `adj(M) = (-1)^(n+1) (M^{n-1} + c_{n-1} M^{n-2} + ... + c_1 I)`.

use super::{Matrix, MatrixError, Ring};

struct Wide<'a> {
    ring: Ring,
    n: usize,
    m: &'a [i128],
}

impl Wide<'_> {
    fn at(&self, i: usize, j: usize) -> i128 {
        self.m[i * self.n + j]
    }
}

fn dot(ring: Ring, xs: impl Iterator<Item = (i128, i128)>) -> Result<i128, MatrixError> {
    let mut acc = 0i128;
    for (x, y) in xs {
        acc = ring.add_wide(acc, ring.mul_wide(x, y)?)?;
    }
    Ok(acc)
}

/// `det(tI - M)` coefficients, leading coefficient first.
fn char_poly(w: &Wide<'_>) -> Result<Vec<i128>, MatrixError> {
    let ring = w.ring;
    let n = w.n;
    let mut poly = vec![1i128];
    for k in (0..n).rev() {
        // trailing principal block M[k.., k..] of size s, built on M[k+1.., k+1..]
        let s = n - k;
        let mut items = Vec::with_capacity(s + 1);
        items.push(1);
        items.push(ring.neg_wide(w.at(k, k))?);
        let mut v: Vec<i128> = (k + 1..n).map(|i| w.at(i, k)).collect();
        for _ in 0..s - 1 {
            let rv = dot(ring, (k + 1..n).map(|j| w.at(k, j)).zip(v.iter().copied()))?;
            items.push(ring.neg_wide(rv)?);
            v = (k + 1..n)
                .map(|i| dot(ring, (k + 1..n).map(|j| w.at(i, j)).zip(v.iter().copied())))
                .collect::<Result<_, _>>()?;
        }
        let mut next = Vec::with_capacity(s + 1);
        for r in 0..=s {
            let terms = (0..s.min(r + 1)).map(|j| (items[r - j], poly[j]));
            next.push(dot(ring, terms)?);
        }
        poly = next;
    }
    Ok(poly)
}

fn widen(m: &Matrix) -> Vec<i128> {
    m.entries().iter().map(|&v| v as i128).collect()
}

fn sign(n: usize) -> i128 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Characteristic polynomial `det(tI - M)`, leading coefficient first.
pub fn characteristic_polynomial(m: &Matrix) -> Result<Vec<i64>, MatrixError> {
    let n = m.require_square()?;
    let data = widen(m);
    let poly = char_poly(&Wide {
        ring: m.ring(),
        n,
        m: &data,
    })?;
    poly.into_iter().map(|c| m.ring().reduce(c)).collect()
}

impl Matrix {
    pub fn det(&self) -> Result<i64, MatrixError> {
        let n = self.require_square()?;
        let ring = self.ring();
        let data = widen(self);
        let poly = char_poly(&Wide { ring, n, m: &data })?;
        ring.reduce(ring.mul_wide(sign(n), poly[n])?)
    }

    /// Transpose of the cofactor matrix, so `M·adj(M) = det(M)·I`.
    pub fn adjugate(&self) -> Result<Matrix, MatrixError> {
        let n = self.require_square()?;
        let ring = self.ring();
        let data = widen(self);
        let poly = char_poly(&Wide { ring, n, m: &data })?;
        // Horner: Q = sum_{k<n} poly[k] M^{n-1-k}
        let mut q = vec![0i128; n * n];
        for i in 0..n {
            q[i * n + i] = poly[0];
        }
        for &coef in &poly[1..n] {
            let mut next = vec![0i128; n * n];
            for i in 0..n {
                for j in 0..n {
                    next[i * n + j] =
                        dot(ring, (0..n).map(|k| (q[i * n + k], data[k * n + j])))?;
                }
                next[i * n + i] = ring.add_wide(next[i * n + i], coef)?;
            }
            q = next;
        }
        let s = sign(n + 1);
        let out = q
            .into_iter()
            .map(|v| ring.reduce(ring.mul_wide(s, v)?))
            .collect::<Result<_, _>>()?;
        Ok(Matrix::from_canonical(ring, n, n, out))
    }

    /// `det(M)^{-1}·adj(M)`; fails with `NotInvertible` when the determinant
    /// is not a unit (±1 over `Z`, coprime to `m` over `Z/m`).
    pub fn invert(&self) -> Result<Matrix, MatrixError> {
        let det = self.det()?;
        let ring = self.ring();
        let inv = ring
            .unit_inverse(det)
            .ok_or(MatrixError::NotInvertible { det, ring })?;
        self.adjugate()?.scale(inv)
    }

    pub fn is_invertible(&self) -> Result<bool, MatrixError> {
        Ok(self.ring().is_unit(self.det()?))
    }
}
