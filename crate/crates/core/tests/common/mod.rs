//! Reference computations used as oracles by the integration tests. None of
//! this goes through the library's own arithmetic beyond `Rational`.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn truncate(x: &Q, digits: u32) -> Q {
    let scale = BigInt::from(10).pow(digits);
    Q::new(
        (x * Q::from_integer(scale.clone())).trunc().to_integer(),
        scale,
    )
}

/// `atan(1/k)` by its alternating series, to about `10^-digits`.
fn atan_inv(k: i64, digits: u32) -> Q {
    let eps = Q::new(BigInt::one(), BigInt::from(10).pow(digits + 5));
    let k2 = qi(k * k);
    let mut power = q(1, k);
    let mut sum = Q::zero();
    let mut j = 0i64;
    while power.abs() > eps {
        let term = &power / qi(2 * j + 1);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power = truncate(&(&power / &k2), digits + 10);
        j += 1;
    }
    sum
}

/// pi to about `10^-digits`, Machin's formula.
pub fn pi(digits: u32) -> Q {
    qi(16) * atan_inv(5, digits + 5) - qi(4) * atan_inv(239, digits + 5)
}

/// cos(x) by Taylor series, `|x| <= 4`.
pub fn cos(x: &Q, digits: u32) -> Q {
    let eps = Q::new(BigInt::one(), BigInt::from(10).pow(digits + 5));
    let x2 = truncate(&(x * x), digits + 10);
    let mut term = Q::one();
    let mut sum = Q::one();
    let mut j = 1i64;
    while term.abs() > eps {
        term = truncate(&(-&term * &x2 / qi((2 * j - 1) * (2 * j))), digits + 10);
        sum += &term;
        j += 1;
    }
    sum
}

/// `1 / cos^2(pi / m)` to about `10^-digits`.
pub fn inverse_cos_squared(m: usize, digits: u32) -> Q {
    let x = pi(digits + 10) / qi(m as i64);
    let c = cos(&x, digits + 10);
    (&c * &c).recip()
}

/// `10^-k`.
pub fn ten_to_minus(k: u32) -> Q {
    Q::new(BigInt::one(), BigInt::from(10).pow(k))
}

// Polynomials as plain coefficient vectors, constant term first.

pub fn trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn eval(p: &[Q], x: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

pub fn derivative(p: &[Q]) -> Vec<Q> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * qi(i as i64))
        .collect()
}

/// Remainder of schoolbook long division.
fn rem(a: &[Q], b: &[Q]) -> Vec<Q> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lb;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn monic(p: Vec<Q>) -> Vec<Q> {
    let lc = p.last().unwrap().clone();
    p.into_iter().map(|c| c / &lc).collect()
}

pub fn gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

fn sign(x: &Q) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let nonzero: Vec<i32> = signs.filter(|s| *s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Distinct real roots by a textbook Sturm sequence over the rationals.
pub fn distinct_real_roots(p: &[Q]) -> usize {
    let p = trim(p.to_vec());
    if p.len() <= 1 {
        return 0;
    }
    let mut chain = vec![p.clone(), derivative(&p)];
    loop {
        let n = chain.len();
        let r = rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    let at_pos = variations(chain.iter().map(|f| sign(f.last().unwrap())));
    let at_neg = variations(chain.iter().map(|f| {
        let s = sign(f.last().unwrap());
        if (f.len() - 1) % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    at_neg - at_pos
}

/// Real roots counted with multiplicity: sum of distinct counts along the
/// tower `p, gcd(p, p'), gcd(that, its derivative), ...`.
pub fn real_roots_with_multiplicity(p: &[Q]) -> usize {
    let mut total = 0;
    let mut f = trim(p.to_vec());
    while f.len() > 1 {
        total += distinct_real_roots(&f);
        f = gcd(&f, &derivative(&f));
    }
    total
}

/// Determinant by fraction-based Gaussian elimination with pivoting.
#[allow(clippy::needless_range_loop)]
pub fn det(m: &[Vec<Q>]) -> Q {
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let n = a.len();
    let mut result = Q::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            result = -result;
        }
        let p = a[col][col].clone();
        result *= &p;
        for r in col + 1..n {
            let f = &a[r][col] / &p;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let v = &f * &a[col][c];
                a[r][c] -= v;
            }
        }
    }
    result
}

/// The symmetric tridiagonal matrix with diagonal `a_0, a_2, ...` and
/// off-diagonal `a_1/2, a_3/2, ...`, built straight from the coefficients.
pub fn form_matrix(p: &[Q]) -> Vec<Vec<Q>> {
    let n = (p.len() - 1) / 2;
    let mut m = vec![vec![Q::zero(); n + 1]; n + 1];
    for k in 0..=n {
        m[k][k] = p[2 * k].clone();
        if k < n {
            m[k][k + 1] = &p[2 * k + 1] / qi(2);
            m[k + 1][k] = &p[2 * k + 1] / qi(2);
        }
    }
    m
}

/// Leading principal minors computed one by one with [`det`].
pub fn leading_minors(m: &[Vec<Q>]) -> Vec<Q> {
    (1..=m.len())
        .map(|j| det(&m[..j].iter().map(|r| r[..j].to_vec()).collect::<Vec<_>>()))
        .collect()
}

/// `v^T M v`.
pub fn quadratic_form(m: &[Vec<Q>], v: &[Q]) -> Q {
    let mut s = Q::zero();
    for (i, row) in m.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            s += e * &v[i] * &v[j];
        }
    }
    s
}
