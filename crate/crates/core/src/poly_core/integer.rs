//! Integer coefficient vectors for remainder sequences. Pseudo-remainders
//! followed by content removal keep the numbers small without any rational
//! reductions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Polynomial, Rational};

/// Constant term first, no trailing zeros; empty means zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly(Vec<BigInt>);

impl IntPoly {
    /// A positive integer multiple of `p`, with content 1.
    pub(crate) fn primitive_of(p: &Polynomial) -> Self {
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let scaled = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        IntPoly::trimmed(scaled).primitive()
    }

    fn trimmed(mut v: Vec<BigInt>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        IntPoly(v)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigInt {
        self.0.last().expect("nonzero polynomial")
    }

    /// Divided by the (positive) gcd of its coefficients.
    pub(crate) fn primitive(self) -> Self {
        let content = self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if content.is_zero() || content.is_one() {
            return self;
        }
        IntPoly(self.0.iter().map(|c| c / &content).collect())
    }

    pub(crate) fn neg(self) -> Self {
        IntPoly(self.0.into_iter().map(|c| -c).collect())
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`, and whether that power of
    /// `lc(b)` is negative.
    pub(crate) fn pseudo_rem(&self, b: &IntPoly) -> (IntPoly, bool) {
        let db = b.degree();
        if self.is_zero() || self.degree() < db {
            return (self.clone(), false);
        }
        let lead = b.lead();
        let steps = self.degree() - db + 1;
        let mut r = self.0.clone();
        for shift in (0..steps).rev() {
            let top = r[shift + db].clone();
            for c in r.iter_mut() {
                *c *= lead;
            }
            if !top.is_zero() {
                for (j, d) in b.0.iter().enumerate() {
                    r[shift + j] -= &top * d;
                }
            }
            r.truncate(shift + db);
        }
        let flipped = lead.is_negative() && steps % 2 == 1;
        (IntPoly::trimmed(r), flipped)
    }

    pub(crate) fn to_polynomial(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(self.0.iter().cloned().map(Rational::from_integer).collect())
    }
}

/// Primitive remainder sequence; the last nonzero entry is a gcd up to a
/// constant.
pub(crate) fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (mut a, mut b) = (IntPoly::primitive_of(a), IntPoly::primitive_of(b));
    if a.is_zero() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b).0.primitive();
        a = b;
        b = r;
    }
    a.to_polynomial().monic()
}
