mod common;

use proptest::prelude::*;
use ybx_core::modmat::{characteristic_polynomial, is_prime, Matrix, Ring};

use common::{gcd, laplace_det};

fn square(moduli: std::ops::RangeInclusive<u64>, max_n: usize) -> impl Strategy<Value = Matrix> {
    (moduli, 1..=max_n).prop_flat_map(|(m, n)| {
        prop::collection::vec(0..m as i64, n * n)
            .prop_map(move |data| Matrix::from_flat(Ring::Mod(m), n, n, data).unwrap())
    })
}

fn pair(moduli: std::ops::RangeInclusive<u64>, max_n: usize) -> impl Strategy<Value = (Matrix, Matrix)> {
    (moduli, 1..=max_n).prop_flat_map(|(m, n)| {
        let entries = prop::collection::vec(0..m as i64, n * n);
        (entries.clone(), entries).prop_map(move |(x, y)| {
            (
                Matrix::from_flat(Ring::Mod(m), n, n, x).unwrap(),
                Matrix::from_flat(Ring::Mod(m), n, n, y).unwrap(),
            )
        })
    })
}

fn integer_square(max_n: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(-9i64..=9, n * n)
            .prop_map(move |data| Matrix::from_flat(Ring::Integers, n, n, data).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn adjugate_identity(a in square(2..=6, 4)) {
        let n = a.rows();
        let det = a.det().unwrap();
        let scaled = Matrix::identity(a.ring(), n).unwrap().scale(det).unwrap();
        prop_assert_eq!(a.mul(&a.adjugate().unwrap()).unwrap(), scaled.clone());
        prop_assert_eq!(a.adjugate().unwrap().mul(&a).unwrap(), scaled);
    }

    #[test]
    fn det_matches_laplace_expansion(a in square(2..=7, 4)) {
        let m = a.ring().modulus().unwrap() as i128;
        let expected = laplace_det(&a.to_rows()).rem_euclid(m) as i64;
        prop_assert_eq!(a.det().unwrap(), expected);
    }

    #[test]
    fn det_over_integers_is_exact(a in integer_square(5)) {
        prop_assert_eq!(a.det().unwrap() as i128, laplace_det(&a.to_rows()));
        let n = a.rows();
        let scaled = Matrix::identity(Ring::Integers, n).unwrap().scale(a.det().unwrap()).unwrap();
        prop_assert_eq!(a.mul(&a.adjugate().unwrap()).unwrap(), scaled);
    }

    #[test]
    fn invert_is_sound(a in square(2..=12, 4)) {
        let m = a.ring().modulus().unwrap();
        let det = a.det().unwrap() as u64;
        match a.invert() {
            Ok(inv) => {
                prop_assert_eq!(gcd(det, m), 1);
                prop_assert!(a.mul(&inv).unwrap().is_identity());
                prop_assert!(inv.mul(&a).unwrap().is_identity());
            }
            Err(_) => prop_assert_ne!(gcd(det, m), 1),
        }
    }

    #[test]
    fn det_is_multiplicative((a, b) in pair(2..=9, 4)) {
        let ring = a.ring();
        let lhs = a.mul(&b).unwrap().det().unwrap();
        let rhs = ring.mul(a.det().unwrap(), b.det().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_plus_nullity(a in square(2..=11, 4)) {
        let p = a.ring().modulus().unwrap();
        prop_assume!(is_prime(p));
        let n = a.rows();
        let rank = a.rank_mod_p(p).unwrap();
        let kernel = a.nullspace_mod_p(p).unwrap();
        prop_assert_eq!(rank + kernel.len(), n);
        for v in &kernel {
            prop_assert!(a.mul_vec(v).unwrap().iter().all(|&x| x == 0));
        }
        prop_assert_eq!(rank == n, a.is_invertible().unwrap());
    }

    #[test]
    fn cayley_hamilton(a in square(2..=8, 4)) {
        // coefficients come leading first, so walk them from the constant term
        let coeffs = characteristic_polynomial(&a).unwrap();
        let n = a.rows();
        let mut acc = Matrix::zeros(a.ring(), n, n).unwrap();
        let mut power = Matrix::identity(a.ring(), n).unwrap();
        for &c in coeffs.iter().rev() {
            acc = acc.add(&power.scale(c).unwrap()).unwrap();
            power = power.mul(&a).unwrap();
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn reduction_is_a_ring_map((a, b) in pair(12..=12, 3), k in prop::sample::select(vec![2u64, 3, 4, 6])) {
        let prod = a.mul(&b).unwrap().reduce_mod(k).unwrap();
        let separately = a.reduce_mod(k).unwrap().mul(&b.reduce_mod(k).unwrap()).unwrap();
        prop_assert_eq!(prod, separately);
    }
}

#[test]
fn exhaustive_invertibility_count() {
    // |GL_2(Z/p)| = (p^2-1)(p^2-p)
    for p in [2u64, 3, 5] {
        let count = common::all_matrices(p, 2)
            .filter(|x| x.is_invertible().unwrap())
            .count() as u64;
        assert_eq!(count, (p * p - 1) * (p * p - p), "p={p}");
    }
    // |GL_2(Z/4)| = 96
    let count = common::all_matrices(4, 2).filter(|x| x.is_invertible().unwrap()).count();
    assert_eq!(count, 96);
}
