use super::ring::is_prime;
use super::{Matrix, MatrixError, Ring};

/// Reduced row echelon form over the field `Z/p`, returned together with
/// the pivot column of each nonzero row.
fn rref_mod_p(rows: usize, cols: usize, mut data: Vec<i64>, p: u64) -> (Vec<i64>, Vec<usize>) {
    let f = Ring::Mod(p);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        for j in 0..cols {
            data.swap(r * cols + j, piv * cols + j);
        }
        let inv = f.unit_inverse(data[r * cols + c]).expect("nonzero in a field");
        for j in 0..cols {
            data[r * cols + j] = f.mul(data[r * cols + j], inv).expect("mod arithmetic");
        }
        for i in 0..rows {
            let factor = data[i * cols + c];
            if i == r || factor == 0 {
                continue;
            }
            for j in 0..cols {
                let t = f.mul(factor, data[r * cols + j]).expect("mod arithmetic");
                data[i * cols + j] = f.sub(data[i * cols + j], t).expect("mod arithmetic");
            }
        }
        pivots.push(c);
        r += 1;
    }
    (data, pivots)
}

fn reduced_entries(m: &Matrix, p: u64) -> Result<Vec<i64>, MatrixError> {
    if !is_prime(p) {
        return Err(MatrixError::NotPrime(p));
    }
    Ok(m.reduce_mod(p)?.entries().to_vec())
}

impl Matrix {
    /// Rank over `Z/p` after reducing the entries mod `p`.
    pub fn rank_mod_p(&self, p: u64) -> Result<usize, MatrixError> {
        let data = reduced_entries(self, p)?;
        Ok(rref_mod_p(self.rows(), self.cols(), data, p).1.len())
    }

    /// Basis of `{v : M v = 0}` over `Z/p`, one vector per free column, in
    /// increasing free-column order.
    pub fn nullspace_mod_p(&self, p: u64) -> Result<Vec<Vec<i64>>, MatrixError> {
        let data = reduced_entries(self, p)?;
        let (rows, cols) = (self.rows(), self.cols());
        let (rref, pivots) = rref_mod_p(rows, cols, data, p);
        let f = Ring::Mod(p);
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0i64; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(rref[r * cols + free])?;
            }
            basis.push(v);
        }
        Ok(basis)
    }
}
