//! Checks phrased as identities between the blocks `a, b, c, d` (and the
//! translations `z, t` for affine maps).

use crate::modmat::{Matrix, MatrixError};

use super::permutation::VectorTables;
use super::{AffineSolution, CheckOutcome, KernelError, LinearSolution, Witness};

fn first_failure(checks: Vec<(&str, bool)>) -> CheckOutcome {
    checks
        .into_iter()
        .find(|(_, ok)| !ok)
        .map_or(CheckOutcome::Pass, |(name, _)| CheckOutcome::identity_fail(name))
}

struct Blocks<'a> {
    a: &'a Matrix,
    b: &'a Matrix,
    c: &'a Matrix,
    d: &'a Matrix,
    one: Matrix,
}

impl<'a> Blocks<'a> {
    fn new(s: &'a LinearSolution) -> Result<Self, MatrixError> {
        Ok(Blocks {
            a: &s.a,
            b: &s.b,
            c: &s.c,
            d: &s.d,
            one: Matrix::identity(s.group.ring(), s.group.rank())?,
        })
    }

    fn one_minus(&self, m: &Matrix) -> Result<Matrix, MatrixError> {
        self.one.sub(m)
    }
}

fn prod(ms: &[&Matrix]) -> Result<Matrix, MatrixError> {
    let mut acc = ms[0].clone();
    for m in &ms[1..] {
        acc = acc.mul(m)?;
    }
    Ok(acc)
}

/// The seven block identities equivalent to the braid relation for a
/// linear `R`.
pub fn verify_braid_algebraic(s: &LinearSolution) -> Result<CheckOutcome, KernelError> {
    let k = Blocks::new(s)?;
    let (a, b, c, d) = (k.a, k.b, k.c, k.d);
    let one_a = k.one_minus(a)?;
    let one_d = k.one_minus(d)?;
    let checks = vec![
        ("a(1-a)=bac", a.mul(&one_a)? == prod(&[b, a, c])?),
        ("d(1-d)=cdb", d.mul(&one_d)? == prod(&[c, d, b])?),
        ("ab=ba(1-d)", a.mul(b)? == prod(&[b, a, &one_d])?),
        ("ca=(1-d)ac", c.mul(a)? == prod(&[&one_d, a, c])?),
        ("dc=cd(1-a)", d.mul(c)? == prod(&[c, d, &one_a])?),
        ("bd=(1-a)db", b.mul(d)? == prod(&[&one_a, d, b])?),
        (
            "cb-bc=ada-dad",
            c.mul(b)?.sub(&b.mul(c)?)? == prod(&[a, d, a])?.sub(&prod(&[d, a, d])?)?,
        ),
    ];
    Ok(first_failure(checks))
}

/// The four block identities equivalent to `R21 R = 1`.
pub fn verify_unitarity_algebraic(s: &LinearSolution) -> Result<CheckOutcome, KernelError> {
    let k = Blocks::new(s)?;
    let (a, b, c, d) = (k.a, k.b, k.c, k.d);
    let checks = vec![
        ("a^2+bc=1", a.mul(a)?.add(&b.mul(c)?)?.is_identity()),
        ("cb+d^2=1", c.mul(b)?.add(&d.mul(d)?)?.is_identity()),
        ("ab+bd=0", a.mul(b)?.add(&b.mul(d)?)?.is_zero()),
        ("ca+dc=0", c.mul(a)?.add(&d.mul(c)?)?.is_zero()),
    ];
    Ok(first_failure(checks))
}

/// Crossing symmetry through its two conditions: for all `x, x'` there are
/// unique `y, y'` with `y' = cx+dy`, `y = cx'+dy'` (iff `1-d^2` is
/// invertible), and these satisfy `x' = ax+by`, `x = ax'+by'`.
///
/// Solving gives `y = (1-d^2)^{-1}(cx' + dcx)`; matching coefficients of `x`
/// and `x'` turns condition 2 into four block identities.
pub fn verify_crossing_linear(s: &LinearSolution) -> Result<CheckOutcome, KernelError> {
    Ok(crossing_identities(s)?.0)
}

fn crossing_identities(
    s: &LinearSolution,
) -> Result<(CheckOutcome, Option<Matrix>), KernelError> {
    let k = Blocks::new(s)?;
    let (a, b, c, d) = (k.a, k.b, k.c, k.d);
    let gap = k.one_minus(&d.mul(d)?)?;
    let gap_inv = match gap.invert() {
        Ok(m) => m,
        Err(MatrixError::NotInvertible { .. }) => {
            let w = Witness::Condition {
                condition: 1,
                detail: "1-d^2 is not invertible".into(),
            };
            return Ok((CheckOutcome::fail(w), None));
        }
        Err(e) => return Err(e.into()),
    };
    let g = &gap_inv;
    let checks = vec![
        ("b(1-d^2)^{-1}c=1", prod(&[b, g, c])?.is_identity()),
        ("a+b(1-d^2)^{-1}dc=0", a.add(&prod(&[b, g, d, c])?)?.is_zero()),
        (
            "bc+bd(1-d^2)^{-1}dc=1",
            b.mul(c)?.add(&prod(&[b, d, g, d, c])?)?.is_identity(),
        ),
        ("a+bd(1-d^2)^{-1}c=0", a.add(&prod(&[b, d, g, c])?)?.is_zero()),
    ];
    let outcome = match checks.into_iter().find(|(_, ok)| !ok) {
        None => CheckOutcome::Pass,
        Some((name, _)) => CheckOutcome::fail(Witness::Condition {
            condition: 2,
            detail: name.into(),
        }),
    };
    Ok((outcome, Some(gap_inv)))
}

fn vec_eq_zero(v: &[i64]) -> bool {
    v.iter().all(|&x| x == 0)
}

struct Vecs<'a> {
    s: &'a AffineSolution,
}

impl Vecs<'_> {
    fn ring(&self) -> crate::modmat::Ring {
        self.s.group().ring()
    }

    fn add(&self, u: &[i64], v: &[i64]) -> Result<Vec<i64>, MatrixError> {
        u.iter().zip(v).map(|(&x, &y)| self.ring().add(x, y)).collect()
    }

    fn sum(&self, vs: &[Vec<i64>]) -> Result<Vec<i64>, MatrixError> {
        let mut acc = vec![0; self.s.group().rank()];
        for v in vs {
            acc = self.add(&acc, v)?;
        }
        Ok(acc)
    }

    /// `m_1 m_2 ... m_k v`
    fn apply(&self, ms: &[&Matrix], v: &[i64]) -> Result<Vec<i64>, MatrixError> {
        let mut out = v.to_vec();
        for m in ms.iter().rev() {
            out = m.mul_vec(&out)?;
        }
        Ok(out)
    }
}

/// Braid relation for an affine map: the linear identities plus the three
/// constant-term equations `cdz+dt=0`, `az+bat=0` and
/// `adz+bt+at+z = cz+dat+dz+t`.
pub fn verify_braid_affine(s: &AffineSolution) -> Result<CheckOutcome, KernelError> {
    let lin = verify_braid_algebraic(&s.linear)?;
    if lin.is_fail() {
        return Ok(lin);
    }
    let l = &s.linear;
    let (a, b, c, d) = (&l.a, &l.b, &l.c, &l.d);
    let (z, t) = (&s.z, &s.t);
    let v = Vecs { s };
    let e1 = v.add(&v.apply(&[c, d], z)?, &v.apply(&[d], t)?)?;
    let e2 = v.add(&v.apply(&[a], z)?, &v.apply(&[b, a], t)?)?;
    let lhs = v.sum(&[v.apply(&[a, d], z)?, v.apply(&[b], t)?, v.apply(&[a], t)?, z.clone()])?;
    let rhs = v.sum(&[v.apply(&[c], z)?, v.apply(&[d, a], t)?, v.apply(&[d], z)?, t.clone()])?;
    Ok(first_failure(vec![
        ("cdz+dt=0", vec_eq_zero(&e1)),
        ("az+bat=0", vec_eq_zero(&e2)),
        ("adz+bt+at+z=cz+dat+dz+t", lhs == rhs),
    ]))
}

/// Unitarity for an affine map: the linear identities plus `az+bt+z=0`
/// and `cz+dt+t=0`.
pub fn verify_unitarity_affine(s: &AffineSolution) -> Result<CheckOutcome, KernelError> {
    let lin = verify_unitarity_algebraic(&s.linear)?;
    if lin.is_fail() {
        return Ok(lin);
    }
    let l = &s.linear;
    let v = Vecs { s };
    let e1 = v.sum(&[l.a.mul_vec(&s.z)?, l.b.mul_vec(&s.t)?, s.z.clone()])?;
    let e2 = v.sum(&[l.c.mul_vec(&s.z)?, l.d.mul_vec(&s.t)?, s.t.clone()])?;
    Ok(first_failure(vec![
        ("az+bt+z=0", vec_eq_zero(&e1)),
        ("cz+dt+t=0", vec_eq_zero(&e2)),
    ]))
}

/// Crossing conditions with translations. The solved `y` picks up the
/// constant `(1-d^2)^{-1}(1+d)t`, which adds two constant-term equations to
/// condition 2.
pub fn verify_crossing_affine(s: &AffineSolution) -> Result<CheckOutcome, KernelError> {
    let (lin, gap_inv) = crossing_identities(&s.linear)?;
    let Some(g) = gap_inv else {
        return Ok(lin);
    };
    if lin.is_fail() {
        return Ok(lin);
    }
    let l = &s.linear;
    let (b, d) = (&l.b, &l.d);
    let v = Vecs { s };
    let y0 = v.apply(&[&g], &d.shift_identity(1)?.mul_vec(&s.t)?)?;
    let e1 = v.add(&b.mul_vec(&y0)?, &s.z)?;
    let e2 = v.sum(&[v.apply(&[b, d], &y0)?, b.mul_vec(&s.t)?, s.z.clone()])?;
    let fail = |name: &str| {
        CheckOutcome::fail(Witness::Condition {
            condition: 2,
            detail: name.into(),
        })
    };
    Ok(if !vec_eq_zero(&e1) {
        fail("b(1-d^2)^{-1}(1+d)t+z=0")
    } else if !vec_eq_zero(&e2) {
        fail("bd(1-d^2)^{-1}(1+d)t+bt+z=0")
    } else {
        CheckOutcome::Pass
    })
}

/// Pointwise form of the crossing conditions: for every `(x, x')`, count the
/// `(y, y')` with `y' = cx+dy+t`, `y = cx'+dy'+t`, require exactly one, and
/// test `x' = ax+by+z`, `x = ax'+by'+z` on it. Costs `|X|^3`.
pub fn verify_crossing_pointwise(
    s: &AffineSolution,
    cap: usize,
) -> Result<CheckOutcome, KernelError> {
    let tables = VectorTables::new(s, cap)?;
    let n = tables.order();
    let g = s.group();
    for x in 0..n {
        for xp in 0..n {
            let mut found = None;
            let mut count = 0;
            for y in 0..n {
                let yp = tables.first(x, y);
                if tables.first(xp, yp) == y {
                    count += 1;
                    found.get_or_insert((y, yp));
                }
            }
            let detail = |what: &str| {
                format!("x={:?} x'={:?}: {what}", g.element(x), g.element(xp))
            };
            if count != 1 {
                return Ok(CheckOutcome::fail(Witness::Condition {
                    condition: 1,
                    detail: detail(&format!("{count} solutions (y,y')")),
                }));
            }
            let (y, yp) = found.expect("count is 1");
            if tables.second(x, y) != xp || tables.second(xp, yp) != x {
                return Ok(CheckOutcome::fail(Witness::Condition {
                    condition: 2,
                    detail: detail(&format!(
                        "y={:?} y'={:?} violate x'=ax+by+z or x=ax'+by'+z",
                        g.element(y),
                        g.element(yp)
                    )),
                }));
            }
        }
    }
    Ok(CheckOutcome::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modmat::{GroupSpec, Ring};
    use crate::ybkernel::complete_solution;

    fn mat(m: u64, rows: Vec<Vec<i64>>) -> Matrix {
        Matrix::from_rows(Ring::Mod(m), rows).unwrap()
    }

    fn shift_binomial(m: u64) -> LinearSolution {
        let g = GroupSpec::new(m, 2).unwrap();
        complete_solution(
            g,
            &mat(m, vec![vec![0, 1], vec![0, 0]]),
            &mat(m, vec![vec![1, 1], vec![0, 1]]),
        )
        .unwrap()
    }

    #[test]
    fn identity_passes_everything() {
        let s = LinearSolution::identity(GroupSpec::new(3, 2).unwrap()).unwrap();
        assert!(verify_braid_algebraic(&s).unwrap().is_pass());
        assert!(verify_unitarity_algebraic(&s).unwrap().is_pass());
        assert!(verify_crossing_linear(&s).unwrap().is_pass());
    }

    #[test]
    fn completed_solution_passes() {
        let s = shift_binomial(5);
        assert!(verify_braid_algebraic(&s).unwrap().is_pass());
        assert!(verify_unitarity_algebraic(&s).unwrap().is_pass());
        assert!(verify_crossing_linear(&s).unwrap().is_pass());
    }

    #[test]
    fn tampered_d_breaks_braid() {
        let mut s = shift_binomial(5);
        s.d = Matrix::identity(Ring::Mod(5), 2).unwrap();
        let out = verify_braid_algebraic(&s).unwrap();
        // a(1-a)=bac does not involve d and still holds; d(1-d)=cdb is first to break
        assert_eq!(
            out.witness(),
            Some(&Witness::Identity {
                name: "d(1-d)=cdb".into()
            })
        );
    }

    #[test]
    fn tampered_c_breaks_unitarity() {
        let mut s = shift_binomial(5);
        s.c = Matrix::identity(Ring::Mod(5), 2).unwrap();
        let out = verify_unitarity_algebraic(&s).unwrap();
        assert_eq!(
            out.witness(),
            Some(&Witness::Identity {
                name: "a^2+bc=1".into()
            })
        );
    }

    #[test]
    fn flip_fails_condition_one() {
        let s = LinearSolution::flip(GroupSpec::new(2, 1).unwrap()).unwrap();
        assert!(verify_braid_algebraic(&s).unwrap().is_pass());
        assert!(verify_unitarity_algebraic(&s).unwrap().is_pass());
        match verify_crossing_linear(&s).unwrap() {
            CheckOutcome::Fail {
                witness: Witness::Condition { condition, .. },
            } => assert_eq!(condition, 1),
            other => panic!("unexpected {other:?}"),
        }
        let pw = verify_crossing_pointwise(&s.clone().into_affine(), 4096).unwrap();
        assert!(pw.is_fail());
    }

    #[test]
    fn pointwise_agrees_on_completed() {
        let s = shift_binomial(3).into_affine();
        assert!(verify_crossing_pointwise(&s, 4096).unwrap().is_pass());
    }

    #[test]
    fn translation_braid_term_respects_order() {
        // a and b do not commute here; az+bat vanishes while az+abt does not
        let g = GroupSpec::new(2, 2).unwrap();
        let a = mat(2, vec![vec![0, 1], vec![1, 1]]);
        let b = mat(2, vec![vec![0, 1], vec![1, 0]]);
        let s = complete_solution(g, &a, &b)
            .unwrap()
            .with_translation(&[0, 1], &[0, 1])
            .unwrap();
        assert!(verify_braid_affine(&s).unwrap().is_pass());
        let r = s.to_permutation(4096).unwrap();
        assert!(crate::ybkernel::verify_qybe_set(&r).is_pass());
    }
}
