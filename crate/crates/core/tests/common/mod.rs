#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ybx_core::modmat::{Matrix, Ring};
use ybx_core::ybkernel::{verify_braid_algebraic, verify_unitarity_algebraic, LinearSolution};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn mat(m: u64, rows: Vec<Vec<i64>>) -> Matrix {
    Matrix::from_rows(Ring::Mod(m), rows).unwrap()
}

/// Every `n x n` matrix over `Z/m`, entries in lexicographic order.
pub fn all_matrices(m: u64, n: usize) -> impl Iterator<Item = Matrix> {
    let total = (m as usize).pow((n * n) as u32);
    (0..total).map(move |mut idx| {
        let mut data = vec![0i64; n * n];
        for slot in data.iter_mut().rev() {
            *slot = (idx % m as usize) as i64;
            idx /= m as usize;
        }
        Matrix::from_flat(Ring::Mod(m), n, n, data).unwrap()
    })
}

pub fn random_matrix(rng: &mut ChaCha8Rng, m: u64, n: usize) -> Matrix {
    let data = (0..n * n).map(|_| rng.gen_range(0..m as i64)).collect();
    Matrix::from_flat(Ring::Mod(m), n, n, data).unwrap()
}

pub fn random_invertible(rng: &mut ChaCha8Rng, m: u64, n: usize) -> Matrix {
    loop {
        let x = random_matrix(rng, m, n);
        if x.is_invertible().unwrap() {
            return x;
        }
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Determinant by Laplace expansion along the first row, in `i128`.
pub fn laplace_det(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return rows[0][0] as i128;
    }
    let mut total = 0i128;
    for j in 0..n {
        let minor: Vec<Vec<i64>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect())
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * rows[0][j] as i128 * laplace_det(&minor);
    }
    total
}

/// `bab^{-1} = a(a+1)^{-1}`, `c = b^{-1}(1-a^2)`, `d = a(a-1)^{-1}`, taken
/// literally: false whenever one of the inverses does not exist.
pub fn closed_form_holds(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> bool {
    let (Ok(b_inv), Ok(plus_inv), Ok(minus_inv)) = (
        b.invert(),
        a.shift_identity(1).unwrap().invert(),
        a.shift_identity(-1).unwrap().invert(),
    ) else {
        return false;
    };
    let conj = b.mul(a).unwrap().mul(&b_inv).unwrap();
    let one_minus_sq = a.mul(a).unwrap().neg().unwrap().shift_identity(1).unwrap();
    conj == a.mul(&plus_inv).unwrap()
        && *c == b_inv.mul(&one_minus_sq).unwrap()
        && *d == a.mul(&minus_inv).unwrap()
}

pub fn block_identities_hold(s: &LinearSolution) -> bool {
    verify_braid_algebraic(s).unwrap().is_pass() && verify_unitarity_algebraic(s).unwrap().is_pass()
}
