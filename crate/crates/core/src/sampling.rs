//! Seeded random instances. Every instance draws from its own ChaCha stream
//! `(seed, index)`, so results do not depend on evaluation order.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certify::{odd_index_factor, AlgebraicThreshold};
use crate::error::Result;
use crate::poly_core::rational::{int, rat};
use crate::poly_core::{Polynomial, Rational};

/// Grid used for uniform rational draws.
const GRID: i64 = 1000;

pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform on the grid `lo + (hi - lo) j / 1000`, `0 < j < 1000`, so always
/// strictly inside `(lo, hi)`.
pub fn random_rational<R: Rng>(rng: &mut R, lo: &Rational, hi: &Rational) -> Rational {
    let j = rng.random_range(1..GRID);
    lo + (hi - lo) * rat(j, GRID)
}

/// Coefficients drawn from `(1/2, 2)`.
fn random_coefficient<R: Rng>(rng: &mut R) -> Rational {
    random_rational(rng, &rat(1, 2), &int(2))
}

/// Nine tenths of a rational lower bound on the threshold for `n`.
pub fn ratio_ceiling(t: &AlgebraicThreshold) -> Rational {
    let refined = t.refined_to(&Rational::new(BigInt::from(1), BigInt::from(1_000_000)));
    refined.bounds().0 * rat(9, 10)
}

/// Degree `2n`, strictly inside the even ratio condition: `a_0 = 1`, odd
/// coefficients random, ratios uniform in `(0, ceiling)` and each even
/// coefficient solved from its ratio.
pub fn even_instance<R: Rng>(rng: &mut R, n: usize, ceiling: &Rational) -> Polynomial {
    let mut a = vec![int(1)];
    for k in 0..n {
        let odd = random_coefficient(rng);
        let r = random_rational(rng, &int(0), ceiling);
        let next = &odd * &odd / (&r * &a[2 * k]);
        a.push(odd);
        a.push(next);
    }
    Polynomial::new(a)
}

/// Degree `2n + 1` with `b_{2k}^2 / (b_{2k-1} b_{2k+1})` uniform below
/// `ceiling * (4k^2 - 1) / (4k^2)`.
pub fn odd_instance<R: Rng>(rng: &mut R, n: usize, ceiling: &Rational) -> Polynomial {
    let mut b = vec![int(1), random_coefficient(rng)];
    for k in 1..=n {
        let even = random_coefficient(rng);
        let r = random_rational(rng, &int(0), &(ceiling * odd_index_factor(k)));
        let next = &even * &even / (&r * &b[2 * k - 1]);
        b.push(even);
        b.push(next);
    }
    Polynomial::new(b)
}

/// Degree `d` with every `a_k^2 / (a_{k-1} a_{k+1})` in `[4, 8)`.
pub fn hutchinson_instance<R: Rng>(rng: &mut R, degree: usize) -> Polynomial {
    let mut a = vec![int(1), random_coefficient(rng)];
    for k in 1..degree {
        let r = if rng.random_range(0..10) == 0 {
            int(4)
        } else {
            random_rational(rng, &int(4), &int(8))
        };
        let next = &a[k] * &a[k] / (&r * &a[k - 1]);
        a.push(next);
    }
    Polynomial::new(a)
}

/// Positive coefficients in `(1/2, 2)`, no other constraint.
pub fn positive_polynomial<R: Rng>(rng: &mut R, degree: usize) -> Polynomial {
    Polynomial::new((0..=degree).map(|_| random_coefficient(rng)).collect())
}

/// A point in `(-3, 3)`.
pub fn random_point<R: Rng>(rng: &mut R) -> Rational {
    random_rational(rng, &int(-3), &int(3))
}

/// Ceilings for `n = 1..=max_n`, index `n - 1`.
pub fn ceilings(max_n: usize) -> Result<Vec<Rational>> {
    (1..=max_n)
        .map(|n| Ok(ratio_ceiling(&AlgebraicThreshold::new(n)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{check_even, check_hutchinson, check_odd, Verdict};

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<u64> = (0..4).map(|_| instance_rng(7, 3).random()).collect();
        let b: Vec<u64> = (0..4).map(|_| instance_rng(7, 3).random()).collect();
        assert_eq!(a, b);
        assert_ne!(
            instance_rng(7, 3).random::<u64>(),
            instance_rng(7, 4).random::<u64>()
        );
    }

    #[test]
    fn rational_draws_stay_inside() {
        let mut rng = instance_rng(1, 0);
        for _ in 0..200 {
            let q = random_rational(&mut rng, &int(4), &int(8));
            assert!(q > int(4) && q < int(8));
        }
    }

    #[test]
    fn instances_meet_their_conditions() {
        let ceil = ceilings(5).unwrap();
        for i in 0..20 {
            let mut rng = instance_rng(11, i);
            let n = 1 + (i as usize % 5);
            let p = even_instance(&mut rng, n, &ceil[n - 1]);
            assert_eq!(p.degree(), 2 * n);
            assert_eq!(check_even(&p).unwrap().verdict, Verdict::CertifiedPositive);
            let q = odd_instance(&mut rng, n, &ceil[n - 1]);
            assert_eq!(q.degree(), 2 * n + 1);
            assert_eq!(
                check_odd(&q).unwrap().verdict,
                Verdict::CertifiedOneRealZero
            );
            let h = hutchinson_instance(&mut rng, n + 2);
            assert_eq!(
                check_hutchinson(&h).unwrap().verdict,
                Verdict::CertifiedAllRealZeros
            );
        }
    }
}
