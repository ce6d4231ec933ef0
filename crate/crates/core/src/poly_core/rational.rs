//! Exact rational scalars.
//!
//! `num_rational::BigRational` already keeps values in lowest terms with a
//! positive denominator, which is exactly the invariant the rest of the crate
//! relies on. This module adds the handful of helpers the crate needs on top.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// `num / den` as an exact rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn sign(q: &Rational) -> Ordering {
    if q.is_positive() {
        Ordering::Greater
    } else if q.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

pub fn pow10(digits: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), digits as usize)
}

/// Round `q` to the nearest multiple of `10^-digits` (ties away from zero).
pub fn round_to_decimal(q: &Rational, digits: u32) -> Rational {
    let scale = pow10(digits);
    let scaled = q * Rational::from_integer(scale.clone());
    Rational::new(round_half_away(&scaled), scale)
}

pub(crate) fn round_half_away(q: &Rational) -> BigInt {
    let two = BigInt::from(2);
    let (num, den) = (q.numer(), q.denom());
    let shifted = num.abs() * &two + den;
    let magnitude = shifted.div_floor(&(den * &two));
    if num.is_negative() {
        -magnitude
    } else {
        magnitude
    }
}

/// Fixed-point decimal rendering with exactly `digits` fractional digits.
pub fn to_decimal_string(q: &Rational, digits: u32) -> String {
    let scaled = round_half_away(&(q * Rational::from_integer(pow10(digits))));
    format_scaled(&scaled, digits)
}

pub(crate) fn format_scaled(units: &BigInt, digits: u32) -> String {
    let negative = units.is_negative();
    let mut body = units.abs().to_string();
    let digits = digits as usize;
    if digits == 0 {
        return if negative { format!("-{body}") } else { body };
    }
    if body.len() <= digits {
        body = format!("{}{}", "0".repeat(digits + 1 - body.len()), body);
    }
    let (whole, frac) = body.split_at(body.len() - digits);
    format!("{}{whole}.{frac}", if negative { "-" } else { "" })
}

/// Best rational approximation of `q` whose denominator does not exceed
/// `max_den`, from the continued-fraction convergents.
pub fn best_approximation(q: &Rational, max_den: &BigInt) -> Rational {
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut rest = q.clone();
    loop {
        let a = rest.floor().to_integer();
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if &q2 > max_den {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = &rest - Rational::from_integer(a);
        if frac.is_zero() {
            break;
        }
        rest = frac.recip();
    }
    Rational::new(p1, q1)
}

/// Serde adapters that write rationals as `"p/q"` strings.
pub mod serde_string {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(q)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        crate::poly_core::parse_rational(&text).map_err(D::Error::custom)
    }

    pub mod vec {
        use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        use super::super::Rational;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for q in v {
                seq.serialize_element(&q.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|t| crate::poly_core::parse_rational(t).map_err(D::Error::custom))
                .collect()
        }
    }
}
