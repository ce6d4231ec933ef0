//! Exact-rational univariate polynomials.

mod integer;
mod polynomial;
pub mod rational;
mod text;

pub(crate) use integer::IntPoly;
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use text::{parse_polynomial, parse_rational, serialize_polynomial, ParseError};
