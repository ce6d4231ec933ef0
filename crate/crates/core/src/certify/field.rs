//! Exact arithmetic in `Q(c)`, `c = 2 cos(pi / (n + 2))`.
//!
//! An element is a rational polynomial in `c`, kept reduced modulo
//! `S_{n+1}`. `S_{n+1}` is usually reducible, so the representation is not
//! canonical; every value question (zero test, sign, inverse) is answered at
//! the isolated root `c` through the threshold machinery instead of by
//! comparing representations.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::scalar::ExactScalar;
use super::threshold::{chebyshev_v, AlgebraicThreshold, Relation, RootLocation};
use crate::error::{Error, Result};
use crate::poly_core::rational::{self, int, Rational};
use crate::poly_core::Polynomial;

#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    field: Arc<AlgebraicThreshold>,
    rep: Polynomial,
}

impl AlgebraicNumber {
    pub fn new(field: Arc<AlgebraicThreshold>, rep: Polynomial) -> Self {
        let rep = rep.rem(field.chebyshev_poly()).expect("S_{n+1} is nonzero");
        AlgebraicNumber { field, rep }
    }

    pub fn from_rational(field: Arc<AlgebraicThreshold>, q: Rational) -> Self {
        Self::new(field, Polynomial::constant(q))
    }

    /// `c` itself.
    pub fn generator(field: Arc<AlgebraicThreshold>) -> Self {
        Self::new(field, Polynomial::x())
    }

    /// `cos(j pi / (n + 2)) = V_j(c) / 2`.
    pub fn cos_multiple(field: Arc<AlgebraicThreshold>, j: usize) -> Self {
        let half = rational::rat(1, 2);
        Self::new(field, chebyshev_v(j).scale(&half))
    }

    pub fn field(&self) -> &Arc<AlgebraicThreshold> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.field.n()
    }

    /// Representative polynomial in `c`.
    pub fn rep(&self) -> &Polynomial {
        &self.rep
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(
            self.n(),
            other.n(),
            "mixing algebraic numbers from different fields"
        );
    }

    pub fn is_zero_value(&self) -> bool {
        self.signum() == Ordering::Equal
    }

    pub fn inverse(&self) -> Result<Self> {
        let s = self.field.chebyshev_poly();
        if let RootLocation::Exact(c) = self.field.location() {
            let v = self.rep.evaluate(c);
            if v.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(Self::from_rational(self.field.clone(), v.recip()));
        }
        if self.field.root_is_shared_with(&self.rep) {
            return Err(Error::DivisionByZero);
        }
        // Drop the factors of S that this element vanishes on; c stays a
        // root of what is left, and the element is invertible modulo it.
        let g = self.rep.gcd(s)?;
        let modulus = s.div_rem(&g)?.0;
        let (unit, inv, _) = self.rep.extended_gcd(&modulus)?;
        if !unit.is_constant() {
            return Err(Error::Internal("inverse modulus not coprime".into()));
        }
        Ok(Self::new(self.field.clone(), inv))
    }

    /// Rational approximation within roughly `10^-digits`.
    pub fn approximate(&self, digits: u32) -> Rational {
        match self.field.location() {
            RootLocation::Exact(c) => self.rep.evaluate(c),
            RootLocation::Isolated { .. } => {
                let width = Rational::new(1.into(), rational::pow10(digits + 20));
                let refined = self.field.refined_to(&width);
                let (lo, hi) = refined.isolating_interval();
                self.rep.evaluate(&((lo + hi) / int(2)))
            }
        }
    }

    /// The value as a rational, when it is one with a denominator below
    /// `10^12`. Candidates come from an approximation and are then verified
    /// exactly, so `Some` is always correct.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.rep.is_constant() {
            return Some(self.rep.coeffs()[0].clone());
        }
        let approx = self.approximate(40);
        let candidate = rational::best_approximation(&approx, &BigInt::from(1_000_000_000_000u64));
        let diff = &self.rep - &Polynomial::constant(candidate.clone());
        self.field.root_is_shared_with(&diff).then_some(candidate)
    }

    pub fn neg(&self) -> Self {
        Self {
            field: self.field.clone(),
            rep: -&self.rep,
        }
    }
}

impl ExactScalar for AlgebraicNumber {
    fn add(&self, rhs: &Self) -> Self {
        self.check_field(rhs);
        Self::new(self.field.clone(), &self.rep + &rhs.rep)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.check_field(rhs);
        Self::new(self.field.clone(), &self.rep - &rhs.rep)
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.check_field(rhs);
        Self::new(self.field.clone(), &self.rep * &rhs.rep)
    }

    fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.field.clone(), self.rep.scale(factor))
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs);
        Ok(ExactScalar::mul(self, &rhs.inverse()?))
    }

    fn signum(&self) -> Ordering {
        self.field.sign_at_root(&self.rep)
    }

    fn is_structural_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn zero_like(&self) -> Self {
        Self::from_rational(self.field.clone(), Rational::zero())
    }

    fn one_like(&self) -> Self {
        Self::from_rational(self.field.clone(), int(1))
    }

    /// Sign of `self * c^2 - 4`, when `t` is this number's own field.
    fn relation_to_threshold(&self, t: &AlgebraicThreshold) -> Result<Relation> {
        if t.n() != self.n() {
            return Err(Error::FieldMismatch(self.n(), t.n()));
        }
        let c = Self::generator(self.field.clone());
        let diff = ExactScalar::sub(
            &ExactScalar::mul(&ExactScalar::mul(self, &c), &c),
            &Self::from_rational(self.field.clone(), int(4)),
        );
        Ok(Relation::from_ordering(diff.signum()))
    }

    fn to_exact_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for AlgebraicNumber {
    /// `[r0, r1, ...]@2cos(pi/m)`: the representative's coefficients in `c`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]@2cos(pi/{})", self.rep, self.n() + 2)
    }
}
