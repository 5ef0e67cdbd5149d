//! Linear and affine set-theoretical solutions of the quantum Yang-Baxter
//! equation over `X = (Z/m)^N`.
//!
//! A linear solution is an automorphism `R(x,y) = (cx+dy, ax+by)` of `X×X`
//! satisfying the braid relation, unitarity and crossing symmetry. Such
//! solutions are parametrized by pairs `(a, b)` with `b` invertible and
//! `ab = ba + aba`; [`ybkernel::complete_solution`] recovers `c` and `d`.

pub mod modmat;
pub mod ybkernel;
pub mod canon;
pub mod hunt;
