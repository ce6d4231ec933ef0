//! Fixed-point decimals with arbitrary precision, plus `pi`, `sin` and `cos`
//! by series. Only what the extremal constructions need.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::poly_core::rational::{format_scaled, pow10, round_half_away, Rational};

/// Guard digits carried by the series evaluations.
const GUARD: u32 = 12;

/// `units / 10^digits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal {
    units: BigInt,
    digits: u32,
}

impl Decimal {
    pub fn from_rational(q: &Rational, digits: u32) -> Self {
        let scaled = q * Rational::from_integer(pow10(digits));
        Decimal {
            units: round_half_away(&scaled),
            digits,
        }
    }

    pub fn from_int(v: i64, digits: u32) -> Self {
        Decimal {
            units: BigInt::from(v) * pow10(digits),
            digits,
        }
    }

    pub fn zero(digits: u32) -> Self {
        Decimal {
            units: BigInt::zero(),
            digits,
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.units.clone(), pow10(self.digits))
    }

    /// Re-rounded to a different number of fractional digits.
    pub fn with_digits(&self, digits: u32) -> Self {
        match digits.cmp(&self.digits) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Decimal {
                units: &self.units * pow10(digits - self.digits),
                digits,
            },
            Ordering::Less => Decimal {
                units: round_div(&self.units, &pow10(self.digits - digits)),
                digits,
            },
        }
    }

    pub fn abs(&self) -> Self {
        Decimal {
            units: self.units.abs(),
            digits: self.digits,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.units.is_positive()
    }

    /// `|self - other| < 10^-tol_digits`.
    pub fn is_within(&self, other: &Decimal, tol_digits: u32) -> bool {
        let diff = (self - other).abs();
        diff.to_rational() < Rational::new(1.into(), pow10(tol_digits))
    }

    pub fn to_f64(&self) -> f64 {
        self.to_string().parse().unwrap_or(f64::NAN)
    }
}

fn round_div(num: &BigInt, den: &BigInt) -> BigInt {
    round_half_away(&Rational::new(num.clone(), den.clone()))
}

fn assert_same(a: &Decimal, b: &Decimal) {
    assert_eq!(a.digits, b.digits, "decimal precision mismatch");
}

impl Add for &Decimal {
    type Output = Decimal;
    fn add(self, rhs: &Decimal) -> Decimal {
        assert_same(self, rhs);
        Decimal {
            units: &self.units + &rhs.units,
            digits: self.digits,
        }
    }
}

impl Sub for &Decimal {
    type Output = Decimal;
    fn sub(self, rhs: &Decimal) -> Decimal {
        assert_same(self, rhs);
        Decimal {
            units: &self.units - &rhs.units,
            digits: self.digits,
        }
    }
}

impl Mul for &Decimal {
    type Output = Decimal;
    fn mul(self, rhs: &Decimal) -> Decimal {
        assert_same(self, rhs);
        Decimal {
            units: round_div(&(&self.units * &rhs.units), &pow10(self.digits)),
            digits: self.digits,
        }
    }
}

impl Div for &Decimal {
    type Output = Decimal;
    fn div(self, rhs: &Decimal) -> Decimal {
        assert_same(self, rhs);
        assert!(!rhs.units.is_zero(), "decimal division by zero");
        Decimal {
            units: round_div(&(&self.units * pow10(self.digits)), &rhs.units),
            digits: self.digits,
        }
    }
}

impl Neg for &Decimal {
    type Output = Decimal;
    fn neg(self) -> Decimal {
        Decimal {
            units: -&self.units,
            digits: self.digits,
        }
    }
}

impl Mul<i64> for &Decimal {
    type Output = Decimal;
    fn mul(self, rhs: i64) -> Decimal {
        Decimal {
            units: &self.units * rhs,
            digits: self.digits,
        }
    }
}

impl Div<i64> for &Decimal {
    type Output = Decimal;
    fn div(self, rhs: i64) -> Decimal {
        Decimal {
            units: round_div(&self.units, &BigInt::from(rhs)),
            digits: self.digits,
        }
    }
}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.digits == other.digits).then(|| self.units.cmp(&other.units))
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_scaled(&self.units, self.digits))
    }
}

/// `atan(1/x)` scaled by `10^digits`, as an integer.
fn arctan_inv(x: i64, digits: u32) -> BigInt {
    let one = pow10(digits);
    let x2 = BigInt::from(x * x);
    let mut power = one / x;
    let mut total = BigInt::zero();
    let mut k = 0i64;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        power = power.div_floor(&x2);
        k += 1;
    }
    total
}

/// `pi` by Machin's formula.
pub fn pi(digits: u32) -> Decimal {
    let work = digits + GUARD;
    let units = arctan_inv(5, work) * 16 - arctan_inv(239, work) * 4;
    Decimal {
        units,
        digits: work,
    }
    .with_digits(digits)
}

/// Taylor series; intended for `|x| <= 4`.
pub fn sin(x: &Decimal) -> Decimal {
    let digits = x.digits;
    let x = x.with_digits(digits + GUARD);
    let x2 = &x * &x;
    let mut term = x.clone();
    let mut total = x.clone();
    let mut k = 1i64;
    while !term.units.is_zero() {
        term = &(&(-&term) * &x2) / ((2 * k) * (2 * k + 1));
        total = &total + &term;
        k += 1;
    }
    total.with_digits(digits)
}

pub fn cos(x: &Decimal) -> Decimal {
    let digits = x.digits;
    let x = x.with_digits(digits + GUARD);
    let x2 = &x * &x;
    let mut term = Decimal::from_int(1, digits + GUARD);
    let mut total = term.clone();
    let mut k = 1i64;
    while !term.units.is_zero() {
        term = &(&(-&term) * &x2) / ((2 * k - 1) * (2 * k));
        total = &total + &term;
        k += 1;
    }
    total.with_digits(digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly_core::rational::rat;

    const PI_50: &str = "3.14159265358979323846264338327950288419716939937511";

    #[test]
    fn pi_digits() {
        assert_eq!(pi(50).to_string(), PI_50);
    }

    #[test]
    fn standard_angles() {
        let d = 60;
        let p = pi(d + 5);
        let third = &p / 3;
        let half = Decimal::from_rational(&rat(1, 2), d + 5);
        assert!(cos(&third).is_within(&half, d));
        assert!(sin(&(&p / 6)).is_within(&half, d));
        let s = sin(&(&p / 4));
        assert!((&s * &s).is_within(&half, d));
        assert!(sin(&p).is_within(&Decimal::zero(d + 5), d));
    }

    #[test]
    fn pythagorean_identity() {
        let d = 80;
        let x = Decimal::from_rational(&rat(7, 5), d);
        let (s, c) = (sin(&x), cos(&x));
        assert!((&(&s * &s) + &(&c * &c)).is_within(&Decimal::from_int(1, d), d - 3));
    }

    #[test]
    fn arithmetic_and_rendering() {
        let a = Decimal::from_rational(&rat(1, 3), 5);
        assert_eq!(a.to_string(), "0.33333");
        assert_eq!((&a * 3).to_string(), "0.99999");
        assert_eq!(
            (&Decimal::from_int(1, 5) / &Decimal::from_int(3, 5)).to_string(),
            "0.33333"
        );
        assert_eq!((-&a).to_string(), "-0.33333");
        assert_eq!(a.with_digits(2).to_string(), "0.33");
        assert!((a.to_f64() - 0.33333).abs() < 1e-12);
    }
}
