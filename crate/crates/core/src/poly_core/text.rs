//! Coefficient-list text format: comma separated, constant term first.
//!
//! Entries are integers (`-3`), fractions (`3/4`) or plain decimals
//! (`0.7071`). Decimals are read exactly, `0.75` is `3/4`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::polynomial::Polynomial;
use super::rational::{pow10, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column where the offending entry starts.
    pub column: usize,
    /// 0-based index of the offending entry.
    pub entry: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at column {} (entry {}): {}",
            self.column, self.entry, self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// Parse a single rational entry.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("empty entry".into());
    }
    if let Some((num, den)) = t.split_once('/') {
        let num = parse_integer(num.trim())?;
        let den = parse_integer(den.trim())?;
        if den.is_zero() {
            return Err(format!("zero denominator in {t:?}"));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("malformed decimal {t:?}"));
        }
        let negative = whole.starts_with('-');
        let whole = if whole.is_empty() || whole == "-" || whole == "+" {
            BigInt::zero()
        } else {
            parse_integer(whole)?
        };
        let scale = pow10(frac.len() as u32);
        let frac: BigInt = frac
            .parse()
            .map_err(|_| format!("malformed decimal {t:?}"))?;
        let magnitude = Rational::new(whole.magnitude().clone().into(), BigInt::from(1))
            + Rational::new(frac, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    Ok(Rational::from_integer(parse_integer(t)?))
}

fn parse_integer(t: &str) -> Result<BigInt, String> {
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("malformed number {t:?}"));
    }
    t.parse().map_err(|_| format!("malformed number {t:?}"))
}

pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    let mut coeffs = Vec::new();
    let mut column = 1;
    for (entry, piece) in text.split(',').enumerate() {
        let lead = piece.len() - piece.trim_start().len();
        let value = parse_rational(piece).map_err(|message| ParseError {
            column: column + lead,
            entry,
            message,
        })?;
        coeffs.push(value);
        column += piece.chars().count() + 1;
    }
    Ok(Polynomial::new(coeffs))
}

pub fn serialize_polynomial(p: &Polynomial) -> String {
    p.to_string()
}

impl FromStr for Polynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_polynomial(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly_core::rational::{int, rat};

    #[test]
    fn parses_examples() {
        assert_eq!(
            parse_polynomial("1, 1, 1").unwrap(),
            Polynomial::from_integers(&[1, 1, 1])
        );
        assert_eq!(
            parse_polynomial("3/4, 3/2, 3/4").unwrap(),
            Polynomial::new(vec![rat(3, 4), rat(3, 2), rat(3, 4)])
        );
        let err = parse_polynomial("1, 0/0").unwrap_err();
        assert_eq!(err.entry, 1);
        assert_eq!(err.column, 4);
        assert!(err.message.contains("zero denominator"));
    }

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_rational("0.75").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_rational("1.").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "abc", "1/", "/2", "1/2/3", "--1", "1e5", " , 1"] {
            assert!(parse_polynomial(bad).is_err(), "{bad:?} should not parse");
        }
        assert_eq!(parse_rational(" +7 ").unwrap(), int(7));
    }

    #[test]
    fn serialization_uses_fractions() {
        let q = Polynomial::new(vec![rat(1, 4), int(-2), rat(6, 4)]);
        assert_eq!(serialize_polynomial(&q), "1/4, -2, 3/2");
        assert_eq!(serialize_polynomial(&q).parse::<Polynomial>().unwrap(), q);
    }
}
