use crate::modmat::{GroupSpec, Matrix, MatrixError};

use super::{KernelError, Singular};

/// `R(x,y) = (cx + dy, ax + by)` on `X×X`. The first output uses `c, d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearSolution {
    pub group: GroupSpec,
    pub a: Matrix,
    pub b: Matrix,
    pub c: Matrix,
    pub d: Matrix,
}

/// `R(x,y) = (cx + dy + t, ax + by + z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineSolution {
    pub linear: LinearSolution,
    pub z: Vec<i64>,
    pub t: Vec<i64>,
}

fn check_block(group: &GroupSpec, m: &Matrix, name: &str) -> Result<(), KernelError> {
    let n = group.rank();
    if m.ring() != group.ring() {
        return Err(KernelError::Shape(format!(
            "{name} is over {}, expected {}",
            m.ring(),
            group.ring()
        )));
    }
    if (m.rows(), m.cols()) != (n, n) {
        return Err(KernelError::Shape(format!(
            "{name} is {}x{}, expected {n}x{n}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

pub(crate) fn check_vector(group: &GroupSpec, v: &[i64], name: &str) -> Result<Vec<i64>, KernelError> {
    if v.len() != group.rank() {
        return Err(KernelError::Shape(format!(
            "{name} has length {}, expected {}",
            v.len(),
            group.rank()
        )));
    }
    Ok(v.iter().map(|&x| group.ring().canonical(x)).collect())
}

impl LinearSolution {
    /// Wraps an arbitrary quadruple. Nothing about the Yang-Baxter relations
    /// is checked here; use the verifiers for that.
    pub fn new(
        group: GroupSpec,
        a: Matrix,
        b: Matrix,
        c: Matrix,
        d: Matrix,
    ) -> Result<LinearSolution, KernelError> {
        for (m, name) in [(&a, "a"), (&b, "b"), (&c, "c"), (&d, "d")] {
            check_block(&group, m, name)?;
        }
        Ok(LinearSolution { group, a, b, c, d })
    }

    /// `a = 0, b = c = 1, d = 0`: the identity map of `X×X`.
    pub fn identity(group: GroupSpec) -> Result<LinearSolution, KernelError> {
        let ring = group.ring();
        let n = group.rank();
        let zero = Matrix::zeros(ring, n, n)?;
        let one = Matrix::identity(ring, n)?;
        LinearSolution::new(group, zero.clone(), one.clone(), one, zero)
    }

    /// The flip `(x,y) -> (y,x)`: `a = 1, b = 0, c = 0, d = 1`.
    pub fn flip(group: GroupSpec) -> Result<LinearSolution, KernelError> {
        let ring = group.ring();
        let n = group.rank();
        let zero = Matrix::zeros(ring, n, n)?;
        let one = Matrix::identity(ring, n)?;
        LinearSolution::new(group, one.clone(), zero.clone(), zero, one)
    }

    pub fn with_translation(self, z: &[i64], t: &[i64]) -> Result<AffineSolution, KernelError> {
        let z = check_vector(&self.group, z, "z")?;
        let t = check_vector(&self.group, t, "t")?;
        Ok(AffineSolution {
            linear: self,
            z,
            t,
        })
    }

    pub fn into_affine(self) -> AffineSolution {
        let zero = vec![0; self.group.rank()];
        AffineSolution {
            linear: self,
            z: zero.clone(),
            t: zero,
        }
    }
}

impl AffineSolution {
    pub fn group(&self) -> GroupSpec {
        self.linear.group
    }

    pub fn is_linear(&self) -> bool {
        self.z.iter().chain(&self.t).all(|&v| v == 0)
    }
}

/// `ab = ba + aba`, the inversion-free form of `bab^{-1} = a(a+1)^{-1}`.
/// Invertibility of `b` or `1+a` is not required here.
pub fn check_eq13(a: &Matrix, b: &Matrix) -> Result<bool, MatrixError> {
    a.require_square()?;
    b.require_square()?;
    let ba = b.mul(a)?;
    let rhs = ba.add(&a.mul(&ba)?)?;
    Ok(a.mul(b)? == rhs)
}

fn inverse_of(m: &Matrix, which: Singular) -> Result<Matrix, KernelError> {
    match m.invert() {
        Ok(inv) => Ok(inv),
        Err(MatrixError::NotInvertible { .. }) => Err(KernelError::NotInvertible(which)),
        Err(e) => Err(e.into()),
    }
}

/// Completes `(a, b)` to `(a, b, c, d)` with `c = b^{-1}(1 - a^2)` and
/// `d = a(a - 1)^{-1}`.
pub fn complete_solution(
    group: GroupSpec,
    a: &Matrix,
    b: &Matrix,
) -> Result<LinearSolution, KernelError> {
    check_block(&group, a, "a")?;
    check_block(&group, b, "b")?;
    let b_inv = inverse_of(b, Singular::B)?;
    let a2 = a.mul(a)?;
    let one_minus_a2 = a2.neg()?.shift_identity(1)?;
    inverse_of(&one_minus_a2, Singular::OneMinusASquared)?;
    let a_minus_1_inv = inverse_of(&a.shift_identity(-1)?, Singular::AMinusOne)?;
    if !check_eq13(a, b)? {
        return Err(KernelError::Eq13Violation);
    }
    let c = b_inv.mul(&one_minus_a2)?;
    let d = a.mul(&a_minus_1_inv)?;
    LinearSolution::new(group, a.clone(), b.clone(), c, d)
}

/// Translation compatible with `z`: `t = -b^{-1}(1 + a) z`.
pub fn affine_translation(
    group: GroupSpec,
    a: &Matrix,
    b: &Matrix,
    z: &[i64],
) -> Result<Vec<i64>, KernelError> {
    let z = check_vector(&group, z, "z")?;
    let b_inv = inverse_of(b, Singular::B)?;
    let shifted = a.shift_identity(1)?.mul_vec(&z)?;
    let t = b_inv.mul_vec(&shifted)?;
    Ok(t.into_iter()
        .map(|v| group.ring().neg(v))
        .collect::<Result<_, _>>()?)
}

pub fn complete_affine(
    group: GroupSpec,
    a: &Matrix,
    b: &Matrix,
    z: &[i64],
) -> Result<AffineSolution, KernelError> {
    let linear = complete_solution(group, a, b)?;
    let t = affine_translation(group, a, b, z)?;
    linear.with_translation(z, &t)
}
