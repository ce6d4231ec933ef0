use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use super::threshold::{compare_ratio, AlgebraicThreshold, Relation};
use crate::error::{Error, Result};
use crate::poly_core::{rational, Rational};

/// Exact ordered-field arithmetic, just enough for the certificate engine.
///
/// Implemented by [`Rational`] and by [`AlgebraicNumber`](super::AlgebraicNumber)
/// so that the same ratio checks and minor computations run on rational
/// inputs and on the irrational extremal coefficients alike.
pub trait ExactScalar: Clone + fmt::Debug + Send + Sync {
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn scale(&self, factor: &Rational) -> Self;
    fn checked_div(&self, rhs: &Self) -> Result<Self>;
    /// Exact sign of the value.
    fn signum(&self) -> Ordering;
    /// Cheap test for a representation that is literally zero. A `false`
    /// answer does not prove the value is nonzero.
    fn is_structural_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// Where the positive value `self` sits relative to `4 / c^2`, the
    /// threshold carried by `t`.
    fn relation_to_threshold(&self, t: &AlgebraicThreshold) -> Result<Relation>;
    /// Exact textual form; `"p/q"` for rationals.
    fn to_exact_string(&self) -> String;

    fn is_positive_value(&self) -> bool {
        self.signum() == Ordering::Greater
    }
}

impl ExactScalar for Rational {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn scale(&self, factor: &Rational) -> Self {
        self * factor
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }

    fn signum(&self) -> Ordering {
        rational::sign(self)
    }

    fn is_structural_zero(&self) -> bool {
        self.is_zero()
    }

    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn relation_to_threshold(&self, t: &AlgebraicThreshold) -> Result<Relation> {
        compare_ratio(self, t)
    }

    fn to_exact_string(&self) -> String {
        self.to_string()
    }
}
