//! Exact real-root counting with Sturm sequences.
//!
//! This is the ground truth every certificate and extremal construction is
//! checked against. It only ever looks at signs of exact rationals.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly_core::{rational, IntPoly, Polynomial, Rational};

/// Signed remainder sequence `p, p', -rem(p, p'), ...`.
///
/// Entries after the first are kept as primitive integer polynomials, i.e.
/// positive multiples of the textbook remainders, so sign variations are
/// unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<Polynomial>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut ints = vec![IntPoly::primitive_of(p)];
        let mut next = IntPoly::primitive_of(&p.derivative());
        while !next.is_zero() {
            let prev = ints.last().expect("chain starts non-empty");
            let (rem, flipped) = prev.pseudo_rem(&next);
            ints.push(next);
            let rem = rem.primitive();
            next = if flipped { rem } else { rem.neg() };
        }
        let mut chain = vec![p.clone()];
        chain.extend(ints[1..].iter().map(IntPoly::to_polynomial));
        Ok(SturmChain { chain })
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        variations(
            self.chain
                .iter()
                .map(|p| rational::sign(p.leading_coefficient())),
        )
    }

    pub fn variations_at_neg_infinity(&self) -> usize {
        variations(self.chain.iter().map(|p| {
            let s = rational::sign(p.leading_coefficient());
            if p.degree() % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }))
    }

    /// Distinct roots in the half-open interval `(lo, hi]`. Exact for any
    /// endpoints when the underlying polynomial is square-free.
    pub fn count_in(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at(lo)
            .saturating_sub(self.variations_at(hi))
    }

    pub fn count_all(&self) -> usize {
        self.variations_at_neg_infinity()
            .saturating_sub(self.variations_at_pos_infinity())
    }
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

pub fn sturm_chain(p: &Polynomial) -> Result<SturmChain> {
    SturmChain::new(p)
}

/// Real roots of a polynomial: distinct, with multiplicity, and one isolating
/// interval `(lo, hi]` per distinct root, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCount {
    pub distinct: usize,
    pub with_multiplicity: usize,
    #[serde(rename = "intervals", with = "interval_strings")]
    pub isolating_intervals: Vec<(Rational, Rational)>,
}

mod interval_strings {
    use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

    use crate::poly_core::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(v: &[(Rational, Rational)], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|(lo, hi)| [lo.to_string(), hi.to_string()])
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Vec<(Rational, Rational)>, D::Error> {
        Vec::<[String; 2]>::deserialize(d)?
            .into_iter()
            .map(|[lo, hi]| {
                Ok((
                    parse_rational(&lo).map_err(D::Error::custom)?,
                    parse_rational(&hi).map_err(D::Error::custom)?,
                ))
            })
            .collect()
    }
}

/// Cauchy's bound: every root satisfies `|x| < 1 + max |a_k / a_deg|`.
pub fn root_bound(p: &Polynomial) -> Rational {
    let lead = p.leading_coefficient().abs();
    let max = p.coeffs()[..p.degree()]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    Rational::one() + max
}

pub fn count_real_roots(p: &Polynomial) -> Result<RootCount> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let square_free = p.square_free_part()?;
    let chain = SturmChain::new(&square_free)?;
    let distinct = chain.count_all();

    // Roots of gcd(g, g') are exactly the roots of g with multiplicity >= 2,
    // so summing distinct counts down the tower counts multiplicities.
    let mut with_multiplicity = distinct;
    let mut tower = p.gcd(&p.derivative())?;
    while !tower.is_constant() {
        with_multiplicity += SturmChain::new(&tower.square_free_part()?)?.count_all();
        tower = tower.gcd(&tower.derivative())?;
    }

    let isolating_intervals = isolate(&chain, distinct, &root_bound(&square_free));
    Ok(RootCount {
        distinct,
        with_multiplicity,
        isolating_intervals,
    })
}

fn isolate(chain: &SturmChain, total: usize, bound: &Rational) -> Vec<(Rational, Rational)> {
    let mut out = Vec::with_capacity(total);
    let mut pending = vec![(-bound.clone(), bound.clone(), total)];
    let two = rational::int(2);
    while let Some((lo, hi, count)) = pending.pop() {
        match count {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / &two;
                let left = chain.count_in(&lo, &mid);
                pending.push((mid.clone(), hi, count - left));
                pending.push((lo, mid, left));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Positivity on the whole real line for an even-degree polynomial with a
/// positive leading coefficient: true iff there are no real roots.
pub fn verify_positive(p: &Polynomial) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() % 2 == 1 {
        return Err(Error::OddDegreePositivity);
    }
    if !p.leading_coefficient().is_positive() {
        return Err(Error::NonPositiveLeadingCoefficient);
    }
    Ok(SturmChain::new(&p.square_free_part()?)?.count_all() == 0)
}
