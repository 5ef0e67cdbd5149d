use std::fmt;

use super::{MatrixError, Ring};

/// Dense row-major matrix over a [`Ring`].
///
/// Entries are kept canonical for the ring, so structural equality is ring
/// equality. Vectors are `n x 1` columns and endomorphisms act on the left.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn from_flat(
        ring: Ring,
        rows: usize,
        cols: usize,
        data: Vec<i64>,
    ) -> Result<Matrix, MatrixError> {
        ring.validate()?;
        if rows == 0 || cols == 0 {
            return Err(MatrixError::Empty);
        }
        if data.len() != rows * cols {
            return Err(MatrixError::Literal(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        let data = data.into_iter().map(|v| ring.canonical(v)).collect();
        Ok(Matrix {
            ring,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<i64>>) -> Result<Matrix, MatrixError> {
        let n_rows = rows.len();
        let n_cols = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(MatrixError::Literal("ragged rows".into()));
        }
        Matrix::from_flat(ring, n_rows, n_cols, rows.into_iter().flatten().collect())
    }

    pub fn column(ring: Ring, entries: Vec<i64>) -> Result<Matrix, MatrixError> {
        let n = entries.len();
        Matrix::from_flat(ring, n, 1, entries)
    }

    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Result<Matrix, MatrixError> {
        Matrix::from_flat(ring, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(ring: Ring, n: usize) -> Result<Matrix, MatrixError> {
        let mut m = Matrix::zeros(ring, n, n)?;
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        Ok(m)
    }

    /// Builds an `n x n` matrix from `f(i, j)`.
    pub fn from_fn(
        ring: Ring,
        n: usize,
        f: impl Fn(usize, usize) -> i64,
    ) -> Result<Matrix, MatrixError> {
        let data = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Matrix::from_flat(ring, n, n, data)
    }

    pub(crate) fn from_canonical(ring: Ring, rows: usize, cols: usize, data: Vec<i64>) -> Matrix {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix {
            ring,
            rows,
            cols,
            data,
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.cols).map(<[i64]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| self.get(i, j) == i64::from(i == j)))
    }

    pub(crate) fn require_square(&self) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MatrixError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn same_ring(&self, other: &Matrix) -> Result<(), MatrixError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(MatrixError::RingMismatch(self.ring, other.ring))
        }
    }

    fn same_shape(&self, other: &Matrix) -> Result<(), MatrixError> {
        self.same_ring(other)?;
        if (self.rows, self.cols) == (other.rows, other.cols) {
            Ok(())
        } else {
            Err(MatrixError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            })
        }
    }

    fn zip_with(
        &self,
        other: &Matrix,
        f: impl Fn(i64, i64) -> Result<i64, MatrixError>,
    ) -> Result<Matrix, MatrixError> {
        self.same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&x, &y)| f(x, y))
            .collect::<Result<_, _>>()?;
        Ok(Matrix::from_canonical(self.ring, self.rows, self.cols, data))
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.zip_with(other, |x, y| self.ring.add(x, y))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.zip_with(other, |x, y| self.ring.sub(x, y))
    }

    pub fn neg(&self) -> Result<Matrix, MatrixError> {
        let data = self
            .data
            .iter()
            .map(|&x| self.ring.neg(x))
            .collect::<Result<_, _>>()?;
        Ok(Matrix::from_canonical(self.ring, self.rows, self.cols, data))
    }

    pub fn scale(&self, k: i64) -> Result<Matrix, MatrixError> {
        let k = self.ring.canonical(k);
        let data = self
            .data
            .iter()
            .map(|&x| self.ring.mul(k, x))
            .collect::<Result<_, _>>()?;
        Ok(Matrix::from_canonical(self.ring, self.rows, self.cols, data))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.same_ring(other)?;
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let ring = self.ring;
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i128 = 0;
                for k in 0..self.cols {
                    let p = ring.mul_wide(self.get(i, k) as i128, other.get(k, j) as i128)?;
                    acc = ring.add_wide(acc, p)?;
                }
                data.push(ring.reduce(acc)?);
            }
        }
        Ok(Matrix::from_canonical(ring, self.rows, other.cols, data))
    }

    /// `A·v` for a plain slice, the matrix acting on a column vector.
    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i64>, MatrixError> {
        if v.len() != self.cols {
            return Err(MatrixError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        let col = Matrix::column(self.ring, v.to_vec())?;
        Ok(self.mul(&col)?.data)
    }

    pub fn pow(&self, k: u32) -> Result<Matrix, MatrixError> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(self.ring, n)?;
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j));
            }
        }
        Matrix::from_canonical(self.ring, self.cols, self.rows, data)
    }

    /// `[self, other] = self·other - other·self`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// `1 + self` for square matrices; `shift_identity(-1)` gives `self - 1`.
    pub fn shift_identity(&self, k: i64) -> Result<Matrix, MatrixError> {
        let n = self.require_square()?;
        self.add(&Matrix::identity(self.ring, n)?.scale(k)?)
    }

    /// Reinterprets the entries in `Z/m`. Valid from the integers or from any
    /// `Z/m'` with `m | m'`.
    pub fn reduce_mod(&self, m: u64) -> Result<Matrix, MatrixError> {
        let target = Ring::zmod(m)?;
        if let Ring::Mod(src) = self.ring {
            if src % m != 0 {
                return Err(MatrixError::Incompatible(format!(
                    "cannot reduce Z/{src} to Z/{m}"
                )));
            }
        }
        Matrix::from_flat(target, self.rows, self.cols, self.data.clone())
    }

    pub fn block_diag(ring: Ring, blocks: &[Matrix]) -> Result<Matrix, MatrixError> {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(ring, n, n)?;
        let mut offset = 0;
        for b in blocks {
            if b.ring != ring {
                return Err(MatrixError::RingMismatch(ring, b.ring));
            }
            let k = b.require_square()?;
            for i in 0..k {
                for j in 0..k {
                    out.data[(offset + i) * n + offset + j] = b.get(i, j);
                }
            }
            offset += k;
        }
        Ok(out)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.data.chunks(self.cols).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
