//! Positivity certificates for polynomials with positive coefficients.
//!
//! An even-degree polynomial `P(x) = sum a_i x^i` with `a_i > 0` is positive
//! on the real line when every ratio `a_{2k+1}^2 / (a_{2k} a_{2k+2})` stays
//! below `1 / cos^2(pi / (n + 2))`, `n = deg P / 2`. The library checks that
//! condition exactly, produces the tridiagonal quadratic form behind it, builds
//! the polynomials sitting on the boundary, and cross-checks everything with a
//! Sturm-sequence root counter.

pub mod certify;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod poly_core;
pub mod root_oracle;
pub mod sampling;
pub mod selftest;
pub mod sweep;

pub use error::{Error, Result};
pub use poly_core::{parse_polynomial, serialize_polynomial, Polynomial, Rational};
