use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::integer;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Univariate polynomial with exact rational coefficients, constant term first.
///
/// The coefficient vector never carries trailing zeros, except for the zero
/// polynomial which is stored as `[0]` with degree 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Polynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading_coefficient(&self) -> &Rational {
        &self.coeffs[self.coeffs.len() - 1]
    }

    /// Index of the first coefficient that is not strictly positive.
    pub fn first_nonpositive(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_positive())
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(x)`. With `x = u / v`, `v > 0`, this is the sign of the
    /// integer `sum L c_i u^i v^(d-i)` (`L` clears the denominators), which
    /// avoids the gcd reductions of rational Horner.
    pub fn sign_at(&self, x: &Rational) -> Ordering {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let (u, v) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut v_power = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * u + (c.numer() * (&lcm / c.denom())) * &v_power;
            v_power *= v;
        }
        acc.cmp(&BigInt::zero())
    }

    pub fn derivative(&self) -> Self {
        if self.is_constant() {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rational::int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// `p(mu * x)`.
    pub fn dilate(&self, mu: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &power);
            power *= mu;
        }
        Self::new(out)
    }

    /// Normalized to leading coefficient 1; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading_coefficient().clone();
        Self::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if divisor.is_zero() {
            return Err(Error::PolynomialDivisionByZero);
        }
        let dd = divisor.degree();
        if self.degree() < dd || self.is_zero() {
            return Ok((Self::zero(), self.clone()));
        }
        let lead = divisor.leading_coefficient();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.degree() - dd + 1];
        for shift in (0..quot.len()).rev() {
            let q = &rem[shift + dd] / lead;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[shift + j] -= &q * d;
                }
            }
            quot[shift] = q;
        }
        rem.truncate(dd.max(1));
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic gcd, via a primitive integer remainder sequence.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        Ok(integer::gcd(self, other))
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` the monic gcd.
    pub fn extended_gcd(&self, other: &Polynomial) -> Result<(Polynomial, Polynomial, Polynomial)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        let lead = r0.leading_coefficient().recip();
        Ok((r0.scale(&lead), s0.scale(&lead), t0.scale(&lead)))
    }

    /// `p / gcd(p, p')`, monic.
    pub fn square_free_part(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.div_rem(&g)?.0.monic())
    }
}

impl Default for Polynomial {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl From<Vec<Rational>> for Polynomial {
    fn from(coeffs: Vec<Rational>) -> Self {
        Self::new(coeffs)
    }
}

fn zip_with(
    a: &Polynomial,
    b: &Polynomial,
    op: impl Fn(Rational, Rational) -> Rational,
) -> Polynomial {
    let len = a.coeffs.len().max(b.coeffs.len());
    Polynomial::new((0..len).map(|k| op(a.coeff(k), b.coeff(k))).collect())
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly_core::rational::{int, rat};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_integers(c)
    }

    #[test]
    fn construction_trims_trailing_zeros() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), 1);
        assert_eq!(q.coeffs().len(), 2);
        let z = p(&[0, 0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), 0);
        assert_eq!(z.coeffs(), &[int(0)]);
        assert!(Polynomial::new(vec![]).is_zero());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p(&[1, 1, 1]).evaluate(&int(0)), int(1));
        let extremal = Polynomial::new(vec![rat(3, 4), rat(3, 2), rat(3, 4)]);
        assert_eq!(extremal.evaluate(&int(-1)), int(0));
        assert_eq!(p(&[1, 1, 1, 1]).evaluate(&int(-1)), int(0));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[1, 1, 1]).derivative(), p(&[1, 2]));
        assert_eq!(p(&[7]).derivative(), Polynomial::zero());
        let cube = Polynomial::new(vec![rat(1, 4), rat(3, 4), rat(3, 4), rat(1, 4)]);
        assert_eq!(
            cube.derivative(),
            Polynomial::new(vec![rat(3, 4), rat(3, 2), rat(3, 4)])
        );
    }

    #[test]
    fn gcd_examples() {
        let sq = p(&[1, 2, 1]);
        let cube = p(&[1, 3, 3, 1]);
        assert_eq!(sq.gcd(&cube).unwrap(), sq);
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[1, 1])).unwrap(), Polynomial::one());
        let quarter_cube = cube.scale(&rat(1, 4));
        assert_eq!(quarter_cube.gcd(&quarter_cube.derivative()).unwrap(), sq);
        assert_eq!(
            Polynomial::zero().gcd(&Polynomial::zero()),
            Err(Error::ZeroGcd)
        );
        assert_eq!(
            Error::ZeroGcd.to_string(),
            "gcd of zero polynomials undefined"
        );
        assert_eq!(
            Polynomial::zero().gcd(&p(&[2, 4])).unwrap(),
            p(&[1, 2]).monic()
        );
    }

    #[test]
    fn square_free_examples() {
        assert_eq!(p(&[1, 2, 1]).square_free_part().unwrap(), p(&[1, 1]));
        assert_eq!(p(&[1, 1, 1]).square_free_part().unwrap(), p(&[1, 1, 1]));
        assert_eq!(p(&[2, 2, 2]).square_free_part().unwrap(), p(&[1, 1, 1]));
        assert!(Polynomial::zero().square_free_part().is_err());
    }

    #[test]
    fn division_reconstructs_dividend() {
        let a = p(&[3, -1, 4, 1, -5, 9]);
        let b = Polynomial::new(vec![rat(2, 7), int(0), rat(-3, 2)]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree() < b.degree());
        assert_eq!(&(&q * &b) + &r, a);
        assert!(a.div_rem(&Polynomial::zero()).is_err());
    }

    #[test]
    fn extended_gcd_bezout_identity() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 2, 1]);
        let (g, s, t) = a.extended_gcd(&b).unwrap();
        assert_eq!(g, p(&[1, 1]));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn dilate_scales_powers() {
        assert_eq!(p(&[1, 1, 1]).dilate(&int(2)), p(&[1, 2, 4]));
    }
}
