use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::certify::{AlgebraicNumber, AlgebraicThreshold, ExactScalar};
use crate::poly_core::rational::{int, rat};
use crate::poly_core::{parse_rational, Rational};

/// Rational combination `sum_j q_j cos(j pi / m)` with `j` in `0..m`.
///
/// Indices are folded with `cos` being even and `2 pi`-periodic, and
/// `cos(pi) = -cos(0)`. Products go through
/// `cos A cos B = (cos(A - B) + cos(A + B)) / 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosineCombination {
    m: usize,
    terms: BTreeMap<usize, Rational>,
}

impl CosineCombination {
    pub fn zero(m: usize) -> Self {
        CosineCombination {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn rational(m: usize, q: Rational) -> Self {
        let mut out = Self::zero(m);
        out.push(0, q);
        out
    }

    /// `cos(j pi / m)` for any integer `j`.
    pub fn cos(m: usize, j: i64) -> Self {
        let mut out = Self::zero(m);
        out.push_angle(j, int(1));
        out
    }

    /// `sin(a pi / m) sin(b pi / m) = (cos((a - b) pi/m) - cos((a + b) pi/m)) / 2`.
    pub fn sin_product(m: usize, a: i64, b: i64) -> Self {
        let mut out = Self::zero(m);
        out.push_angle(a - b, rat(1, 2));
        out.push_angle(a + b, rat(-1, 2));
        out
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    /// Nonzero `(j, q_j)` pairs in increasing `j`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.terms.iter().map(|(j, q)| (*j, q))
    }

    fn push(&mut self, j: usize, q: Rational) {
        let slot = self.terms.entry(j).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&j);
        }
    }

    fn push_angle(&mut self, j: i64, q: Rational) {
        let period = 2 * self.m as i64;
        let mut j = j.rem_euclid(period);
        if j > self.m as i64 {
            j = period - j;
        }
        if j == self.m as i64 {
            self.push(0, -q);
        } else {
            self.push(j as usize, q);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "cosine bases differ");
        let mut out = self.clone();
        for (j, q) in &other.terms {
            out.push(*j, q.clone());
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let mut out = Self::zero(self.m);
        for (j, q) in &self.terms {
            out.push(*j, q * factor);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "cosine bases differ");
        let mut out = Self::zero(self.m);
        let half = rat(1, 2);
        for (i, p) in &self.terms {
            for (j, q) in &other.terms {
                let w = p * q * &half;
                out.push_angle(*i as i64 - *j as i64, w.clone());
                out.push_angle(*i as i64 + *j as i64, w);
            }
        }
        out
    }

    /// The same value inside `Q(2 cos(pi/m))`.
    pub fn to_algebraic(&self, field: &Arc<AlgebraicThreshold>) -> AlgebraicNumber {
        assert_eq!(field.n() + 2, self.m, "field does not match cosine basis");
        self.terms.iter().fold(
            AlgebraicNumber::from_rational(field.clone(), Rational::zero()),
            |acc, (j, q)| acc.add(&AlgebraicNumber::cos_multiple(field.clone(), *j).scale(q)),
        )
    }

    pub fn to_wire(&self) -> Vec<(usize, String)> {
        self.terms
            .iter()
            .map(|(j, q)| (*j, q.to_string()))
            .collect()
    }

    pub fn from_wire(m: usize, wire: &[(usize, String)]) -> Result<Self, String> {
        let mut out = Self::zero(m);
        for (j, q) in wire {
            if *j >= m {
                return Err(format!("basis index {j} out of range for m = {m}"));
            }
            out.push(*j, parse_rational(q)?);
        }
        Ok(out)
    }
}

impl fmt::Display for CosineCombination {
    /// `1/2 - 1/2*cos(2*pi/5)`; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (j, q)) in self.terms.iter().enumerate() {
            let (sign, mag) = if q.is_negative() {
                ("-", -q)
            } else {
                ("+", q.clone())
            };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let angle = if *j == 1 {
                format!("pi/{}", self.m)
            } else {
                format!("{j}*pi/{}", self.m)
            };
            match (*j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "cos({angle})")?,
                _ => write!(f, "{mag}*cos({angle})")?,
            }
        }
        Ok(())
    }
}

/// JSON form of an exactly represented coefficient list:
/// `{"basis": "cos(j*pi/(n+2))", "n": n, "coeffs": [[[j, "q"], ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactCoefficients {
    pub basis: String,
    pub n: usize,
    pub coeffs: Vec<Vec<(usize, String)>>,
}

pub const COSINE_BASIS_LABEL: &str = "cos(j*pi/(n+2))";

impl ExactCoefficients {
    pub fn from_combinations(n: usize, coeffs: &[CosineCombination]) -> Self {
        ExactCoefficients {
            basis: COSINE_BASIS_LABEL.to_string(),
            n,
            coeffs: coeffs.iter().map(CosineCombination::to_wire).collect(),
        }
    }

    pub fn to_combinations(&self) -> Result<Vec<CosineCombination>, String> {
        if self.basis != COSINE_BASIS_LABEL {
            return Err(format!("unknown basis {:?}", self.basis));
        }
        self.coeffs
            .iter()
            .map(|c| CosineCombination::from_wire(self.n + 2, c))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::threshold;

    #[test]
    fn folding_rules() {
        let m = 5;
        assert_eq!(CosineCombination::cos(m, -2), CosineCombination::cos(m, 2));
        assert_eq!(CosineCombination::cos(m, 8), CosineCombination::cos(m, 2));
        assert_eq!(
            CosineCombination::cos(m, 5),
            CosineCombination::rational(m, int(-1))
        );
        assert_eq!(
            CosineCombination::cos(m, 10),
            CosineCombination::rational(m, int(1))
        );
    }

    #[test]
    fn product_to_sum_at_pi_over_3() {
        // m = 3: sin(pi/3) sin(2 pi/3) = 3/4, 2 sin^2(pi/3) cos(pi/3) = 3/4
        let m = 3;
        let s = CosineCombination::sin_product(m, 1, 2);
        let f = Arc::new(threshold(1).unwrap());
        assert_eq!(s.to_algebraic(&f).to_rational(), Some(rat(3, 4)));
        let a0 = CosineCombination::sin_product(m, 1, 1)
            .mul(&CosineCombination::cos(m, 1))
            .scale(&int(2));
        assert_eq!(a0.to_algebraic(&f).to_rational(), Some(rat(3, 4)));
    }

    #[test]
    fn display_form() {
        let c = CosineCombination::sin_product(5, 1, 1);
        assert_eq!(c.to_string(), "1/2 - 1/2*cos(2*pi/5)");
        assert_eq!(CosineCombination::zero(5).to_string(), "0");
        assert_eq!(
            CosineCombination::rational(5, rat(-3, 2)).to_string(),
            "-3/2"
        );
        assert_eq!(
            CosineCombination::cos(5, 1).scale(&rat(-1, 1)).to_string(),
            "-cos(pi/5)"
        );
    }

    #[test]
    fn wire_round_trip() {
        let m = 7;
        let c = CosineCombination::sin_product(m, 2, 3).mul(&CosineCombination::cos(m, 1));
        let wire = ExactCoefficients::from_combinations(5, std::slice::from_ref(&c));
        let json = serde_json::to_string(&wire).unwrap();
        let back: ExactCoefficients = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_combinations().unwrap(), vec![c]);
    }
}
