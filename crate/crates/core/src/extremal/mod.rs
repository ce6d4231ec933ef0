//! Polynomials sitting exactly on the boundary of the ratio conditions.
//!
//! With `alpha = pi / (n + 2)` and `s_k = sin(k alpha) sin((k + 1) alpha)`:
//!
//! * even family (degree `2n`): `a_{2k} = 2 sin^2((k+1) alpha) cos(alpha)`,
//!   `a_{2k-1} = 2 s_k`, equal to `sum_k s_k (1 + x)^2 x^{2k-2}`, so `-1` is a
//!   root of multiplicity at least 2;
//! * odd family (degree `2n + 1`): the antiderivative of the even one shifted
//!   to vanish at `-1`, so `-1` is a root of multiplicity at least 3.
//!
//! Coefficients are produced both exactly, as rational combinations of
//! `cos(j alpha)`, and as fixed-point decimals.

mod cosine;
mod numeric;

use std::sync::Arc;

use num_traits::{One, Signed, Zero};

pub use cosine::{CosineCombination, ExactCoefficients, COSINE_BASIS_LABEL};
pub use numeric::{cos, pi, sin, Decimal};

use crate::certify::{AlgebraicNumber, AlgebraicThreshold, ExactScalar};
use crate::error::{Error, Result};
use crate::poly_core::rational::{int, rat};
use crate::poly_core::{Polynomial, Rational};

pub const DEFAULT_PRECISION: u32 = 60;
pub const MIN_PRECISION: u32 = 30;
/// Irrational coefficients are rounded to denominator `10^50` before they
/// reach the root oracle.
pub const RATIONALIZATION_DIGITS: u32 = 50;
/// Extra digits carried while evaluating the closed forms.
const WORK_DIGITS: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtremalMode {
    /// Decimal coefficients with this many fractional digits.
    Numeric(u32),
    Exact,
}

impl ExtremalMode {
    /// Digits of the decimal coefficients; exact constructions carry them
    /// at the default precision.
    pub fn precision(self) -> u32 {
        match self {
            ExtremalMode::Numeric(p) => p,
            ExtremalMode::Exact => DEFAULT_PRECISION,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Shared body of both families.
#[doc(hidden)]
#[derive(Clone, Debug)]
pub struct Construction {
    parity: Parity,
    n: usize,
    mode: ExtremalMode,
    exact: Vec<CosineCombination>,
    numeric: Vec<Decimal>,
}

#[derive(Clone, Debug)]
pub struct ExtremalEven(Construction);

#[derive(Clone, Debug)]
pub struct ExtremalOdd(Construction);

fn validate(n: usize, mode: ExtremalMode) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidN);
    }
    if let ExtremalMode::Numeric(p) = mode {
        if p < MIN_PRECISION {
            return Err(Error::PrecisionTooLow(p));
        }
    }
    Ok(())
}

/// `sin(j alpha)` for `j = 0..=n+1` and `cos(alpha)`, at `digits`.
fn numeric_trig(n: usize, digits: u32) -> (Vec<Decimal>, Decimal) {
    let alpha = &pi(digits) / (n as i64 + 2);
    let sines = (0..=n + 1).map(|j| sin(&(&alpha * j as i64))).collect();
    (sines, cos(&alpha))
}

/// `s_k` for `k = 1..=n` at `digits`, index 0 unused (zero).
fn numeric_sine_products(n: usize, digits: u32) -> Vec<Decimal> {
    let (sines, _) = numeric_trig(n, digits);
    (0..=n)
        .map(|k| {
            if k == 0 {
                Decimal::zero(digits)
            } else {
                &sines[k] * &sines[k + 1]
            }
        })
        .collect()
}

fn even_numeric(n: usize, digits: u32) -> Vec<Decimal> {
    let work = digits + WORK_DIGITS;
    let (s, c) = numeric_trig(n, work);
    let mut out = Vec::with_capacity(2 * n + 1);
    for k in 0..=n {
        if k >= 1 {
            out.push(&(&s[k] * &s[k + 1]) * 2);
        }
        out.push(&(&(&s[k + 1] * &s[k + 1]) * &c) * 2);
    }
    out.into_iter().map(|d| d.with_digits(digits)).collect()
}

fn odd_numeric(n: usize, digits: u32) -> Vec<Decimal> {
    let work = digits + WORK_DIGITS;
    let (s, c) = numeric_trig(n, work);
    let mut b0 = Decimal::zero(work);
    for k in 1..=n {
        let kk = k as i64;
        b0 = &b0 + &(&(&s[k] * &s[k + 1]) / (kk * (2 * kk - 1) * (2 * kk + 1)));
    }
    let mut out = vec![b0];
    for k in 0..=n {
        let kk = k as i64;
        if k >= 1 {
            out.push(&(&s[k] * &s[k + 1]) / kk);
        }
        out.push(&(&(&(&s[k + 1] * &s[k + 1]) * &c) * 2) / (2 * kk + 1));
    }
    out.into_iter().map(|d| d.with_digits(digits)).collect()
}

fn sine_product(n: usize, k: usize) -> CosineCombination {
    CosineCombination::sin_product(n + 2, k as i64, k as i64 + 1)
}

fn even_exact(n: usize) -> Vec<CosineCombination> {
    let m = n + 2;
    let cos_alpha = CosineCombination::cos(m, 1);
    let mut out = Vec::with_capacity(2 * n + 1);
    for k in 0..=n {
        if k >= 1 {
            out.push(sine_product(n, k).scale(&int(2)));
        }
        let sq = CosineCombination::sin_product(m, k as i64 + 1, k as i64 + 1);
        out.push(sq.mul(&cos_alpha).scale(&int(2)));
    }
    out
}

fn odd_exact(n: usize) -> Vec<CosineCombination> {
    let m = n + 2;
    let even = even_exact(n);
    let b0 = (1..=n).fold(CosineCombination::zero(m), |acc, k| {
        let k = k as i64;
        acc.add(&sine_product(n, k as usize).scale(&rat(1, k * (2 * k - 1) * (2 * k + 1))))
    });
    std::iter::once(b0)
        .chain(
            even.iter()
                .enumerate()
                .map(|(i, a)| a.scale(&rat(1, i as i64 + 1))),
        )
        .collect()
}

/// Coefficients of `sum_k s_k (1 + x)^2 x^{2k-2}`, expanded term by term.
pub fn even_summed_form(n: usize) -> Vec<CosineCombination> {
    let mut out = vec![CosineCombination::zero(n + 2); 2 * n + 1];
    for k in 1..=n {
        let s = sine_product(n, k);
        out[2 * k - 2] = out[2 * k - 2].add(&s);
        out[2 * k - 1] = out[2 * k - 1].add(&s.scale(&int(2)));
        out[2 * k] = out[2 * k].add(&s);
    }
    out
}

/// Coefficients of `H(x) - H(-1)` where
/// `H(x) = sum_k s_k (x^{2k-1}/(2k-1) + 2 x^{2k}/(2k) + x^{2k+1}/(2k+1))`.
pub fn odd_summed_form(n: usize) -> Vec<CosineCombination> {
    let m = n + 2;
    let mut h = vec![CosineCombination::zero(m); 2 * n + 2];
    for k in 1..=n {
        let s = sine_product(n, k);
        for (power, weight) in [(2 * k - 1, 1), (2 * k, 2), (2 * k + 1, 1)] {
            h[power] = h[power].add(&s.scale(&rat(weight, power as i64)));
        }
    }
    let at_minus_one = h
        .iter()
        .enumerate()
        .fold(CosineCombination::zero(m), |acc, (j, c)| {
            acc.add(&c.scale(&int(if j % 2 == 0 { 1 } else { -1 })))
        });
    h[0] = h[0].add(&at_minus_one.scale(&int(-1)));
    h
}

fn field(n: usize) -> Arc<AlgebraicThreshold> {
    Arc::new(AlgebraicThreshold::new(n).expect("n >= 1 checked at construction"))
}

impl Construction {
    fn build(parity: Parity, n: usize, mode: ExtremalMode) -> Result<Self> {
        validate(n, mode)?;
        let digits = mode.precision();
        let (exact, numeric) = match parity {
            Parity::Even => (even_exact(n), even_numeric(n, digits)),
            Parity::Odd => (odd_exact(n), odd_numeric(n, digits)),
        };
        Ok(Construction {
            parity,
            n,
            mode,
            exact,
            numeric,
        })
    }

    fn algebraic(&self) -> Vec<AlgebraicNumber> {
        let f = field(self.n);
        self.exact.iter().map(|c| c.to_algebraic(&f)).collect()
    }

    /// Ratio identity as a polynomial relation in `c = 2 cos(alpha)`, so
    /// no division happens: `lhs * c^2 == rhs` for every index.
    fn verify_exact(&self) -> bool {
        let a = self.algebraic();
        let c = AlgebraicNumber::generator(field(self.n));
        let c2 = c.mul(&c);
        let pairs: Vec<(AlgebraicNumber, AlgebraicNumber)> = match self.parity {
            Parity::Even => (0..self.n)
                .map(|k| {
                    let lhs = a[2 * k + 1].mul(&a[2 * k + 1]);
                    let rhs = a[2 * k].mul(&a[2 * k + 2]).scale(&int(4));
                    (lhs, rhs)
                })
                .collect(),
            Parity::Odd => (1..=self.n)
                .map(|k| {
                    let k2 = (4 * k * k) as i64;
                    let lhs = a[2 * k].mul(&a[2 * k]).scale(&int(k2));
                    let rhs = a[2 * k - 1].mul(&a[2 * k + 1]).scale(&int(4 * (k2 - 1)));
                    (lhs, rhs)
                })
                .collect(),
        };
        pairs
            .iter()
            .all(|(lhs, rhs)| lhs.mul(&c2).sub(rhs).is_zero_value())
    }

    /// Ratios against `1/cos^2(alpha)` (scaled by `(4k^2-1)/(4k^2)` for the
    /// odd family) within `10^-(precision - 10)`.
    fn verify_numeric(&self) -> bool {
        let digits = self.numeric[0].digits();
        let work = digits + WORK_DIGITS;
        let (_, c) = numeric_trig(self.n, work);
        let one = Decimal::from_int(1, work);
        let target = &one / &(&c * &c);
        let a: Vec<Decimal> = self.numeric.iter().map(|d| d.with_digits(work)).collect();
        let tol = digits.saturating_sub(WORK_DIGITS);
        match self.parity {
            Parity::Even => (0..self.n).all(|k| {
                let ratio = &(&a[2 * k + 1] * &a[2 * k + 1]) / &(&a[2 * k] * &a[2 * k + 2]);
                ratio.is_within(&target, tol)
            }),
            Parity::Odd => (1..=self.n).all(|k| {
                let k2 = (4 * k * k) as i64;
                let ratio = &(&a[2 * k] * &a[2 * k]) / &(&a[2 * k - 1] * &a[2 * k + 1]);
                let scaled = &(&target * (k2 - 1)) / k2;
                ratio.is_within(&scaled, tol)
            }),
        }
    }

    fn rational_coefficients(&self) -> Option<Vec<Rational>> {
        self.algebraic()
            .iter()
            .map(AlgebraicNumber::to_rational)
            .collect()
    }

    fn exact_rational(&self) -> Option<Polynomial> {
        if let Some(coeffs) = self.rational_coefficients() {
            return Some(Polynomial::new(coeffs));
        }
        let a = self.algebraic();
        let inv = a[0].inverse().ok()?;
        a.iter()
            .map(|x| x.mul(&inv).to_rational())
            .collect::<Option<Vec<_>>>()
            .map(Polynomial::new)
    }

    fn rationalized(&self, digits: u32) -> Polynomial {
        let coeffs = if digits <= self.numeric[0].digits() {
            self.numeric.clone()
        } else {
            match self.parity {
                Parity::Even => even_numeric(self.n, digits),
                Parity::Odd => odd_numeric(self.n, digits),
            }
        };
        Polynomial::new(
            coeffs
                .iter()
                .map(|d| d.with_digits(digits).to_rational())
                .collect(),
        )
    }

    fn structured_rationalization(&self, digits: u32) -> Polynomial {
        let s = numeric_sine_products(self.n, digits + WORK_DIGITS);
        let square = Polynomial::from_integers(&[1, 2, 1]);
        let mut q = Polynomial::zero();
        for (k, sk) in s.iter().enumerate().skip(1) {
            let r = sk.with_digits(digits).to_rational();
            q = q + &square * &Polynomial::monomial(r, 2 * k - 2);
        }
        match self.parity {
            Parity::Even => q,
            Parity::Odd => {
                let mut h = vec![Rational::zero()];
                h.extend(
                    q.coeffs()
                        .iter()
                        .enumerate()
                        .map(|(j, c)| c / int(j as i64 + 1)),
                );
                let h = Polynomial::new(h);
                let shift = h.evaluate(&int(-1));
                h - Polynomial::constant(shift)
            }
        }
    }

    fn rational_companion(&self) -> Polynomial {
        self.exact_rational()
            .unwrap_or_else(|| self.structured_rationalization(RATIONALIZATION_DIGITS))
    }

    fn matches_summed_form(&self) -> bool {
        let summed = match self.parity {
            Parity::Even => even_summed_form(self.n),
            Parity::Odd => odd_summed_form(self.n),
        };
        let f = field(self.n);
        self.exact.len() == summed.len()
            && self
                .exact
                .iter()
                .zip(&summed)
                .all(|(a, b)| a.add(&b.scale(&int(-1))).to_algebraic(&f).is_zero_value())
    }
}

/// Common view of both families.
pub trait Extremal {
    #[doc(hidden)]
    fn construction(&self) -> &Construction;

    fn n(&self) -> usize {
        self.construction().n
    }

    fn parity(&self) -> Parity {
        self.construction().parity
    }

    fn mode(&self) -> ExtremalMode {
        self.construction().mode
    }

    /// `alpha = pi * p / q`, returned as `(p, q) = (1, n + 2)`.
    fn alpha(&self) -> (usize, usize) {
        (1, self.n() + 2)
    }

    fn degree(&self) -> usize {
        self.construction().exact.len() - 1
    }

    fn coeffs_exact(&self) -> &[CosineCombination] {
        &self.construction().exact
    }

    fn coeffs_numeric(&self) -> &[Decimal] {
        &self.construction().numeric
    }

    /// Coefficients as elements of `Q(2 cos(alpha))`.
    fn algebraic_coefficients(&self) -> Vec<AlgebraicNumber> {
        self.construction().algebraic()
    }

    fn exact_json(&self) -> ExactCoefficients {
        ExactCoefficients::from_combinations(self.n(), self.coeffs_exact())
    }

    /// Decimal coefficients in the comma-separated text format.
    fn numeric_text(&self) -> String {
        self.coeffs_numeric()
            .iter()
            .map(Decimal::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// The coefficients, when every one of them is rational.
    fn rational_coefficients(&self) -> Option<Vec<Rational>> {
        self.construction().rational_coefficients()
    }

    /// The coefficients themselves when all are rational; otherwise the
    /// rational polynomial obtained by dividing through by the constant
    /// term, when that one is rational. `None` if neither works.
    fn exact_rational(&self) -> Option<Polynomial> {
        self.construction().exact_rational()
    }

    /// Each decimal coefficient rounded to denominator `10^digits`.
    fn rationalized(&self, digits: u32) -> Polynomial {
        self.construction().rationalized(digits)
    }

    /// Rounds only the `s_k` and rebuilds from the summed form, which keeps
    /// the root at `-1` exact (multiplicity 2, resp. 3).
    fn structured_rationalization(&self, digits: u32) -> Polynomial {
        self.construction().structured_rationalization(digits)
    }

    /// [`exact_rational`](Extremal::exact_rational), falling back to the
    /// structured rationalization at 50 digits.
    fn rational_companion(&self) -> Polynomial {
        self.construction().rational_companion()
    }

    /// Closed-form coefficients agree exactly with the term-by-term
    /// expansion of the summed form.
    fn matches_summed_form(&self) -> bool {
        self.construction().matches_summed_form()
    }

    /// Exact identity check in `Q(2 cos(alpha))`.
    fn verify_ratios_exact(&self) -> bool {
        self.construction().verify_exact()
    }

    /// Decimal check within `10^-(precision - 10)`.
    fn verify_ratios_numeric(&self) -> bool {
        self.construction().verify_numeric()
    }
}

impl Extremal for ExtremalEven {
    fn construction(&self) -> &Construction {
        &self.0
    }
}

impl Extremal for ExtremalOdd {
    fn construction(&self) -> &Construction {
        &self.0
    }
}

pub fn even_extremal(n: usize, mode: ExtremalMode) -> Result<ExtremalEven> {
    Construction::build(Parity::Even, n, mode).map(ExtremalEven)
}

pub fn odd_extremal(n: usize, mode: ExtremalMode) -> Result<ExtremalOdd> {
    Construction::build(Parity::Odd, n, mode).map(ExtremalOdd)
}

/// Every ratio sits exactly on its threshold: symbolically in exact mode,
/// to `10^-(precision - 10)` in numeric mode.
pub fn verify_extremal_ratios<E: Extremal + ?Sized>(e: &E) -> bool {
    match e.mode() {
        ExtremalMode::Exact => e.verify_ratios_exact(),
        ExtremalMode::Numeric(_) => e.verify_ratios_numeric(),
    }
}

/// Factor applied to odd-indexed coefficients: `1 - eps` for `eps >= 0`,
/// `1 / (1 - |eps|)` for negative `eps`.
pub fn perturbation_factor(eps: &Rational) -> Result<Rational> {
    let one = Rational::one();
    if eps <= &-one.clone() || eps >= &one {
        return Err(Error::EpsilonOutOfRange {
            value: eps.to_string(),
            low: -1,
        });
    }
    Ok(if eps.is_negative() {
        (&one - eps.abs()).recip()
    } else {
        &one - eps
    })
}

fn scale_odd<T: Clone>(coeffs: &[T], scale: impl Fn(&T) -> T) -> Vec<T> {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { scale(c) } else { c.clone() })
        .collect()
}

/// Odd coefficients of the rational companion multiplied by `1 - eps`, so
/// every ratio becomes `(1 - eps)^2` times its boundary value.
pub fn perturb_toward_interior(e: &ExtremalEven, eps: &Rational) -> Result<Polynomial> {
    if !eps.is_positive() || eps >= &Rational::one() {
        return Err(Error::EpsilonOutOfRange {
            value: eps.to_string(),
            low: 0,
        });
    }
    perturb(e, eps)
}

/// Signed version on the rational companion; negative `eps` pushes the
/// ratios above the threshold.
pub fn perturb(e: &ExtremalEven, eps: &Rational) -> Result<Polynomial> {
    let f = perturbation_factor(eps)?;
    let base = e.rational_companion();
    Ok(Polynomial::new(scale_odd(base.coeffs(), |c| c * &f)))
}

/// Signed perturbation applied to the exact coefficients.
pub fn perturb_exact(e: &ExtremalEven, eps: &Rational) -> Result<Vec<AlgebraicNumber>> {
    let f = perturbation_factor(eps)?;
    Ok(scale_odd(&e.algebraic_coefficients(), |c| c.scale(&f)))
}
