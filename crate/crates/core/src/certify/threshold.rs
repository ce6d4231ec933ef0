//! The coefficient-ratio threshold `1 / cos^2(pi / (n + 2))`, held exactly.
//!
//! With `c = 2 cos(pi / (n + 2))` the threshold is `4 / c^2`. The number `c`
//! is the largest root of `S_{n+1}`, where `S_0 = 1`, `S_1 = x` and
//! `S_{k+1} = x S_k - S_{k-1}`; the roots of `S_{n+1}` are
//! `2 cos(j pi / (n + 2))` for `j = 1..=n+1`, all simple. We keep `c` as a
//! rational isolating interval against `S_{n+1}` and decide every comparison
//! exactly: a gcd test for equality, bisection otherwise.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly_core::rational::{self, int, rat, Rational};
use crate::poly_core::Polynomial;
use crate::root_oracle::SturmChain;

/// Outcome of comparing a ratio against its threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    Below,
    Equal,
    Above,
}

impl Relation {
    pub fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => Relation::Below,
            Ordering::Equal => Relation::Equal,
            Ordering::Greater => Relation::Above,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Below => "Below",
            Relation::Equal => "Equal",
            Relation::Above => "Above",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `S_k` from the three-term recurrence.
pub fn chebyshev_s(k: usize) -> Polynomial {
    let x = Polynomial::x();
    let (mut prev, mut cur) = (Polynomial::one(), x.clone());
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &(&x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `V_j` with `V_j(2 cos t) = 2 cos(j t)`: `V_0 = 2`, `V_1 = x`, same recurrence.
pub fn chebyshev_v(j: usize) -> Polynomial {
    let x = Polynomial::x();
    let (mut prev, mut cur) = (Polynomial::constant(int(2)), x.clone());
    if j == 0 {
        return prev;
    }
    for _ in 1..j {
        let next = &(&x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Where the largest root `c` of `S_{n+1}` is known to be.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootLocation {
    /// `c` is this rational (happens for n = 1 only).
    Exact(Rational),
    /// `lo < c < hi`, `S(lo) < 0 < S(hi)` and no other root of `S` in `[lo, hi]`.
    Isolated { lo: Rational, hi: Rational },
}

impl RootLocation {
    fn bisected(&self, s: &Polynomial) -> RootLocation {
        match self {
            RootLocation::Exact(_) => self.clone(),
            RootLocation::Isolated { lo, hi } => {
                let mid = (lo + hi) / int(2);
                match s.sign_at(&mid) {
                    Ordering::Equal => RootLocation::Exact(mid),
                    Ordering::Less => RootLocation::Isolated {
                        lo: mid,
                        hi: hi.clone(),
                    },
                    Ordering::Greater => RootLocation::Isolated {
                        lo: lo.clone(),
                        hi: mid,
                    },
                }
            }
        }
    }

    fn width(&self) -> Rational {
        match self {
            RootLocation::Exact(_) => Rational::zero(),
            RootLocation::Isolated { lo, hi } => hi - lo,
        }
    }
}

/// Exact handle on `1 / cos^2(pi / (n + 2)) = 4 / c^2`.
///
/// Refinement returns a new value; a threshold is immutable once built and
/// can be shared freely between threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicThreshold {
    n: usize,
    chebyshev: Polynomial,
    location: RootLocation,
}

pub fn threshold(n: usize) -> Result<AlgebraicThreshold> {
    AlgebraicThreshold::new(n)
}

impl AlgebraicThreshold {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidN);
        }
        let s = chebyshev_s(n + 1);
        let chain = SturmChain::new(&s)?;
        let two = int(2);

        // Walk the lower end up from 0 towards 2, halving the step, until
        // (lo, 2] holds exactly one root. The gap below c is more than half
        // the gap above it, so some step lands in between.
        let mut step = two.clone();
        let mut lo = Rational::zero();
        for _ in 0..512 {
            lo = &two - &step;
            if chain.count_in(&lo, &two) == 1 {
                break;
            }
            step /= &two;
        }
        if chain.count_in(&lo, &two) != 1 {
            return Err(Error::Internal(format!(
                "failed to isolate the largest root of S_{}",
                n + 1
            )));
        }

        // lo can sit exactly on the second-largest root, or at 0 (n = 1);
        // move off it.
        let mut location = RootLocation::Isolated { lo, hi: two };
        while let RootLocation::Isolated { lo, .. } = &location {
            if lo.is_positive() && s.sign_at(lo) == Ordering::Less {
                break;
            }
            location = location.bisected(&s);
        }
        Ok(AlgebraicThreshold {
            n,
            chebyshev: s,
            location,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `S_{n+1}`.
    pub fn chebyshev_poly(&self) -> &Polynomial {
        &self.chebyshev
    }

    pub fn location(&self) -> &RootLocation {
        &self.location
    }

    /// `(lo, hi)` bracketing `c`; both ends equal `c` when it is rational.
    pub fn isolating_interval(&self) -> (Rational, Rational) {
        match &self.location {
            RootLocation::Exact(c) => (c.clone(), c.clone()),
            RootLocation::Isolated { lo, hi } => (lo.clone(), hi.clone()),
        }
    }

    pub fn bisected(&self) -> Self {
        AlgebraicThreshold {
            location: self.location.bisected(&self.chebyshev),
            ..self.clone()
        }
    }

    /// Refined until the interval on `c` is narrower than `width`.
    pub fn refined_to(&self, width: &Rational) -> Self {
        let mut location = self.location.clone();
        while &location.width() >= width && matches!(location, RootLocation::Isolated { .. }) {
            location = location.bisected(&self.chebyshev);
        }
        AlgebraicThreshold {
            location,
            ..self.clone()
        }
    }

    /// Rational `(lower, upper)` bounds on the threshold `4 / c^2`.
    pub fn bounds(&self) -> (Rational, Rational) {
        let (lo, hi) = self.isolating_interval();
        let four = int(4);
        (&four / (&hi * &hi), &four / (&lo * &lo))
    }

    /// Midpoint of threshold bounds tighter than `10^-digits`.
    pub fn approximate(&self, digits: u32) -> Rational {
        let tol = Rational::new(1.into(), rational::pow10(digits));
        let mut t = self.clone();
        loop {
            let (lower, upper) = t.bounds();
            if &upper - &lower < tol {
                return (lower + upper) / int(2);
            }
            t = t.bisected().bisected().bisected();
        }
    }

    /// The threshold as an exact rational when it is one (n = 1, 2, 4).
    pub fn rational_value(&self) -> Option<Rational> {
        if let RootLocation::Exact(c) = &self.location {
            return Some(int(4) / (c * c));
        }
        let approx = self.approximate(40);
        let candidate = rational::best_approximation(&approx, &num_bigint::BigInt::from(1_000_000));
        match compare_ratio(&candidate, self) {
            Ok(Relation::Equal) => Some(candidate),
            _ => None,
        }
    }

    /// Exact sign of `e(c)`.
    pub fn sign_at_root(&self, e: &Polynomial) -> Ordering {
        if e.is_constant() {
            return rational::sign(&e.coeffs()[0]);
        }
        let (lo, hi) = match &self.location {
            RootLocation::Exact(c) => return e.sign_at(c),
            RootLocation::Isolated { lo, hi } => (lo, hi),
        };
        if self.root_is_shared_with(e) {
            return Ordering::Equal;
        }
        let chain = SturmChain::new(
            &e.square_free_part()
                .expect("nonconstant polynomial is nonzero"),
        )
        .expect("square-free part is nonzero");
        let mut location = RootLocation::Isolated {
            lo: lo.clone(),
            hi: hi.clone(),
        };
        loop {
            match &location {
                RootLocation::Exact(c) => return e.sign_at(c),
                RootLocation::Isolated { lo, hi } => {
                    // No root of e in (lo, hi] means e keeps the sign it has at hi.
                    if chain.count_in(lo, hi) == 0 {
                        return e.sign_at(hi);
                    }
                }
            }
            location = location.bisected(&self.chebyshev);
        }
    }

    /// Whether `c` is a root of `e`, via `gcd(e, S_{n+1})`.
    pub fn root_is_shared_with(&self, e: &Polynomial) -> bool {
        if e.is_zero() {
            return true;
        }
        let g = e.gcd(&self.chebyshev).expect("S is nonzero");
        if g.is_constant() {
            return false;
        }
        match &self.location {
            RootLocation::Exact(c) => g.evaluate(c).is_zero(),
            // g divides the square-free S, so it is square-free and a Sturm
            // count on (lo, hi] is exact; c is the only root of S there.
            RootLocation::Isolated { lo, hi } => {
                SturmChain::new(&g).expect("g is nonzero").count_in(lo, hi) == 1
            }
        }
    }

    /// Human-readable exact description.
    pub fn describe(&self) -> String {
        let m = self.n + 2;
        match self.rational_value() {
            Some(t) => format!("1/cos^2(pi/{m}) = {t} (exact rational)"),
            None => {
                let (lo, hi) = self.isolating_interval();
                format!(
                    "1/cos^2(pi/{m}) = 4/c^2, c = largest root of S_{} = [{}] in ({lo}, {hi})",
                    self.n + 1,
                    self.chebyshev
                )
            }
        }
    }
}

/// Decide `r` against `4 / c^2` exactly.
///
/// Equality holds iff `c` is a common root of `S_{n+1}` and `r x^2 - 4`.
/// Otherwise the interval on `c` is bisected until `r lo^2 > 4` (above) or
/// `r hi^2 < 4` (below).
pub fn compare_ratio(r: &Rational, t: &AlgebraicThreshold) -> Result<Relation> {
    if !r.is_positive() {
        return Err(Error::NonPositiveRatio);
    }
    let four = int(4);
    if let RootLocation::Exact(c) = &t.location {
        return Ok(Relation::from_ordering((r * c * c).cmp(&four)));
    }
    let quadratic = Polynomial::new(vec![-four.clone(), Rational::zero(), r.clone()]);
    if t.root_is_shared_with(&quadratic) {
        return Ok(Relation::Equal);
    }
    let mut location = t.location.clone();
    loop {
        match &location {
            RootLocation::Exact(c) => return Ok(Relation::from_ordering((r * c * c).cmp(&four))),
            RootLocation::Isolated { lo, hi } => {
                if r * lo * lo > four {
                    return Ok(Relation::Above);
                }
                if r * hi * hi < four {
                    return Ok(Relation::Below);
                }
            }
        }
        location = location.bisected(&t.chebyshev);
    }
}

/// `(4k^2 - 1) / (4k^2)`, the per-index factor in the odd-degree condition.
pub fn odd_index_factor(k: usize) -> Rational {
    let four_k2 = 4 * (k as i64) * (k as i64);
    rat(four_k2 - 1, four_k2)
}

impl fmt::Display for AlgebraicThreshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_polynomials_follow_the_recurrence() {
        assert_eq!(chebyshev_s(0), Polynomial::one());
        assert_eq!(chebyshev_s(2), Polynomial::from_integers(&[-1, 0, 1]));
        assert_eq!(chebyshev_s(3), Polynomial::from_integers(&[0, -2, 0, 1]));
        // S_k(2) = k + 1
        for k in 0..10 {
            assert_eq!(chebyshev_s(k).evaluate(&int(2)), int(k as i64 + 1));
        }
        assert_eq!(chebyshev_v(2), Polynomial::from_integers(&[-2, 0, 1]));
    }

    #[test]
    fn rational_thresholds() {
        assert_eq!(threshold(1).unwrap().rational_value(), Some(int(4)));
        assert_eq!(threshold(2).unwrap().rational_value(), Some(int(2)));
        assert_eq!(threshold(4).unwrap().rational_value(), Some(rat(4, 3)));
        for n in [3, 5, 6, 7, 8, 10] {
            assert_eq!(threshold(n).unwrap().rational_value(), None, "n = {n}");
        }
        assert_eq!(threshold(0), Err(Error::InvalidN));
    }

    #[test]
    fn interval_isolates_the_largest_root() {
        for n in 1..=16 {
            let t = threshold(n).unwrap();
            let s = t.chebyshev_poly();
            match t.location() {
                RootLocation::Exact(c) => assert!(s.evaluate(c).is_zero()),
                RootLocation::Isolated { lo, hi } => {
                    assert_eq!(s.sign_at(lo), Ordering::Less);
                    assert_eq!(s.sign_at(hi), Ordering::Greater);
                    let chain = SturmChain::new(s).unwrap();
                    assert_eq!(chain.count_in(lo, &int(1000)), 1, "n = {n}");
                }
            }
        }
    }

    #[test]
    fn compare_ratio_examples() {
        assert_eq!(
            compare_ratio(&int(1), &threshold(1).unwrap()),
            Ok(Relation::Below)
        );
        assert_eq!(
            compare_ratio(&int(4), &threshold(1).unwrap()),
            Ok(Relation::Equal)
        );
        assert_eq!(
            compare_ratio(&int(2), &threshold(2).unwrap()),
            Ok(Relation::Equal)
        );
        assert_eq!(
            compare_ratio(&rat(4, 3), &threshold(4).unwrap()),
            Ok(Relation::Equal)
        );
        assert_eq!(
            compare_ratio(&rat(5, 3), &threshold(4).unwrap()),
            Ok(Relation::Above)
        );
        assert_eq!(
            compare_ratio(&int(0), &threshold(4).unwrap()),
            Err(Error::NonPositiveRatio)
        );
    }

    #[test]
    fn compare_ratio_near_irrational_threshold() {
        // n = 3: 4/c^2 with c the golden ratio, i.e. 4/(phi + 1) = 1.5278640450...
        let t = threshold(3).unwrap();
        assert_eq!(
            compare_ratio(&rat(15278640450, 10_000_000_000), &t),
            Ok(Relation::Below)
        );
        assert_eq!(
            compare_ratio(&rat(15278640451, 10_000_000_000), &t),
            Ok(Relation::Above)
        );
    }

    #[test]
    fn sign_at_root_matches_direct_knowledge() {
        let t = threshold(2).unwrap(); // c = sqrt(2)
        assert_eq!(
            t.sign_at_root(&Polynomial::from_integers(&[-2, 0, 1])),
            Ordering::Equal
        );
        assert_eq!(
            t.sign_at_root(&Polynomial::from_integers(&[-1, 1])),
            Ordering::Greater
        );
        // 141421356/10^8 < sqrt 2
        let below = Polynomial::new(vec![-rat(141421357, 100_000_000), int(1)]);
        assert_eq!(t.sign_at_root(&below), Ordering::Less);
    }
}
