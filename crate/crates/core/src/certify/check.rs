//! Ratio conditions and the certificate report.
//!
//! Three conditions are checked:
//! * [`Condition::Even`]: degree `2n`, every
//!   `a_{2k+1}^2 / (a_{2k} a_{2k+2})` strictly below `1/cos^2(pi/(n+2))`
//!   implies `P(x) > 0` on the real line.
//! * [`Condition::Odd`]: degree `2n+1`, every
//!   `a_{2k}^2 / (a_{2k-1} a_{2k+1})` strictly below
//!   `(4k^2-1)/(4k^2) * 1/cos^2(pi/(n+2))` implies exactly one real zero.
//!   This is the even condition applied to `P'`, so the reported minors are
//!   those of the form of `P'`.
//! * [`Condition::Hutchinson`]: every `a_k^2 / (a_{k-1} a_{k+1}) >= 4`
//!   implies all zeros are real. (Not to be confused with the matrix-minor
//!   criterion used to prove the even-degree result.)
//!
//! Failing a condition says nothing about the polynomial: the conditions
//! are sufficient, not necessary.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::form::build_form_from;
use super::scalar::ExactScalar;
use super::threshold::{odd_index_factor, threshold, AlgebraicThreshold, Relation};
use crate::error::{Error, Result};
use crate::poly_core::rational::int;
use crate::poly_core::{parse_rational, Polynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Condition {
    Even,
    Odd,
    Hutchinson,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    CertifiedPositive,
    CertifiedOneRealZero,
    CertifiedAllRealZeros,
    ConditionFails,
    BoundaryCase,
}

impl Verdict {
    pub fn is_certified(self) -> bool {
        matches!(
            self,
            Verdict::CertifiedPositive
                | Verdict::CertifiedOneRealZero
                | Verdict::CertifiedAllRealZeros
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CertifiedPositive => "CertifiedPositive",
            Verdict::CertifiedOneRealZero => "CertifiedOneRealZero",
            Verdict::CertifiedAllRealZeros => "CertifiedAllRealZeros",
            Verdict::ConditionFails => "ConditionFails",
            Verdict::BoundaryCase => "BoundaryCase",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Even => "Even",
            Condition::Odd => "Odd",
            Condition::Hutchinson => "Hutchinson",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Comparison<S = Rational> {
    pub k: usize,
    pub ratio: S,
    pub relation: Relation,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CertificateReport<S = Rational> {
    pub degree: usize,
    pub condition: Condition,
    pub comparisons: Vec<Comparison<S>>,
    pub minors: Vec<S>,
    pub verdict: Verdict,
}

impl<S> CertificateReport<S> {
    pub fn relations(&self) -> Vec<Relation> {
        self.comparisons.iter().map(|c| c.relation).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct ComparisonWire {
    k: usize,
    ratio: String,
    relation: Relation,
}

#[derive(Serialize, Deserialize)]
struct ReportWire {
    degree: usize,
    condition: Condition,
    comparisons: Vec<ComparisonWire>,
    minors: Vec<String>,
    verdict: Verdict,
}

impl<S: ExactScalar> Serialize for CertificateReport<S> {
    fn serialize<Z: serde::Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        ReportWire {
            degree: self.degree,
            condition: self.condition,
            comparisons: self
                .comparisons
                .iter()
                .map(|c| ComparisonWire {
                    k: c.k,
                    ratio: c.ratio.to_exact_string(),
                    relation: c.relation,
                })
                .collect(),
            minors: self
                .minors
                .iter()
                .map(ExactScalar::to_exact_string)
                .collect(),
            verdict: self.verdict,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CertificateReport<Rational> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = ReportWire::deserialize(d)?;
        let parse = |t: &str| parse_rational(t).map_err(D::Error::custom);
        Ok(CertificateReport {
            degree: wire.degree,
            condition: wire.condition,
            comparisons: wire
                .comparisons
                .iter()
                .map(|c| {
                    Ok(Comparison {
                        k: c.k,
                        ratio: parse(&c.ratio)?,
                        relation: c.relation,
                    })
                })
                .collect::<std::result::Result<_, D::Error>>()?,
            minors: wire
                .minors
                .iter()
                .map(|m| parse(m))
                .collect::<std::result::Result<_, _>>()?,
            verdict: wire.verdict,
        })
    }
}

fn ensure_positive<S: ExactScalar>(coeffs: &[S]) -> Result<()> {
    match coeffs.iter().position(|c| !c.is_positive_value()) {
        Some(idx) => Err(Error::NonPositiveCoefficient(idx)),
        None => Ok(()),
    }
}

/// Verdict for strict-inequality conditions: any Above fails, all Below
/// certifies, anything else is a boundary case.
fn strict_verdict(relations: impl IntoIterator<Item = Relation>, certified: Verdict) -> Verdict {
    let mut any_equal = false;
    for r in relations {
        match r {
            Relation::Above => return Verdict::ConditionFails,
            Relation::Equal => any_equal = true,
            Relation::Below => {}
        }
    }
    if any_equal {
        Verdict::BoundaryCase
    } else {
        certified
    }
}

fn guard_minors<S: ExactScalar>(verdict: Verdict, minors: &[S]) -> Result<()> {
    if verdict.is_certified() {
        if let Some(j) = minors.iter().position(|m| !m.is_positive_value()) {
            return Err(Error::Internal(format!(
                "ratio condition holds but leading minor {} is not positive",
                j + 1
            )));
        }
    }
    Ok(())
}

pub fn check_even(p: &Polynomial) -> Result<CertificateReport> {
    if p.degree() % 2 == 1 {
        return Err(Error::EvenDegreeRequired(p.degree()));
    }
    if p.degree() == 0 {
        return check_even_with_coeffs(p.coeffs(), None);
    }
    check_even_with(p, &threshold(p.degree() / 2)?)
}

/// As [`check_even`], against a caller-supplied threshold.
pub fn check_even_with(p: &Polynomial, t: &AlgebraicThreshold) -> Result<CertificateReport> {
    check_even_with_coeffs(p.coeffs(), Some(t))
}

/// Even-degree check on any exact scalar type. `t` may be omitted, in which
/// case it is built from the degree; it is only used when the degree is >= 2.
pub fn check_even_with_coeffs<S: ExactScalar>(
    coeffs: &[S],
    t: Option<&AlgebraicThreshold>,
) -> Result<CertificateReport<S>> {
    let degree = coeffs.len().saturating_sub(1);
    if coeffs.is_empty() || degree % 2 == 1 {
        return Err(Error::EvenDegreeRequired(degree));
    }
    ensure_positive(coeffs)?;
    if degree == 0 {
        return Ok(CertificateReport {
            degree,
            condition: Condition::Even,
            comparisons: vec![],
            minors: vec![],
            verdict: Verdict::CertifiedPositive,
        });
    }
    let n = degree / 2;
    let owned;
    let t = match t {
        Some(t) => t,
        None => {
            owned = threshold(n)?;
            &owned
        }
    };
    let mut comparisons = Vec::with_capacity(n);
    for k in 0..n {
        let num = coeffs[2 * k + 1].mul(&coeffs[2 * k + 1]);
        let den = coeffs[2 * k].mul(&coeffs[2 * k + 2]);
        let ratio = num.checked_div(&den)?;
        let relation = ratio.relation_to_threshold(t)?;
        comparisons.push(Comparison { k, ratio, relation });
    }
    let minors = build_form_from(coeffs)?.leading_minors();
    let verdict = strict_verdict(
        comparisons.iter().map(|c| c.relation),
        Verdict::CertifiedPositive,
    );
    guard_minors(verdict, &minors)?;
    Ok(CertificateReport {
        degree,
        condition: Condition::Even,
        comparisons,
        minors,
        verdict,
    })
}

pub fn check_odd(p: &Polynomial) -> Result<CertificateReport> {
    if p.degree().is_multiple_of(2) {
        return Err(Error::OddDegreeRequired(p.degree()));
    }
    if p.degree() < 3 {
        return Err(Error::DegreeTooSmall {
            degree: p.degree(),
            minimum: 3,
        });
    }
    check_odd_with(p, &threshold(p.degree() / 2)?)
}

pub fn check_odd_with(p: &Polynomial, t: &AlgebraicThreshold) -> Result<CertificateReport> {
    check_odd_with_coeffs(p.coeffs(), t)
}

pub fn check_odd_with_coeffs<S: ExactScalar>(
    coeffs: &[S],
    t: &AlgebraicThreshold,
) -> Result<CertificateReport<S>> {
    let degree = coeffs.len().saturating_sub(1);
    if coeffs.is_empty() || degree.is_multiple_of(2) {
        return Err(Error::OddDegreeRequired(degree));
    }
    if degree < 3 {
        return Err(Error::DegreeTooSmall { degree, minimum: 3 });
    }
    ensure_positive(coeffs)?;
    let n = degree / 2;
    let mut comparisons = Vec::with_capacity(n);
    for k in 1..=n {
        let num = coeffs[2 * k].mul(&coeffs[2 * k]);
        let den = coeffs[2 * k - 1].mul(&coeffs[2 * k + 1]);
        let ratio = num.checked_div(&den)?;
        let relation = ratio
            .scale(&odd_index_factor(k).recip())
            .relation_to_threshold(t)?;
        comparisons.push(Comparison { k, ratio, relation });
    }
    let derivative: Vec<S> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| c.scale(&int(j as i64)))
        .collect();
    let minors = build_form_from(&derivative)?.leading_minors();
    let verdict = strict_verdict(
        comparisons.iter().map(|c| c.relation),
        Verdict::CertifiedOneRealZero,
    );
    guard_minors(verdict, &minors)?;
    Ok(CertificateReport {
        degree,
        condition: Condition::Odd,
        comparisons,
        minors,
        verdict,
    })
}

/// Non-strict: ratios equal to 4 still certify.
pub fn check_hutchinson(p: &Polynomial) -> Result<CertificateReport> {
    let degree = p.degree();
    if degree < 2 {
        return Err(Error::DegreeTooSmall { degree, minimum: 2 });
    }
    let coeffs = p.coeffs();
    ensure_positive(coeffs)?;
    let four = int(4);
    let comparisons: Vec<Comparison> = (1..degree)
        .map(|k| {
            let ratio = &coeffs[k] * &coeffs[k] / (&coeffs[k - 1] * &coeffs[k + 1]);
            let relation = Relation::from_ordering(ratio.cmp(&four));
            Comparison { k, ratio, relation }
        })
        .collect();
    let verdict = if comparisons.iter().any(|c| c.relation == Relation::Below) {
        Verdict::ConditionFails
    } else {
        Verdict::CertifiedAllRealZeros
    };
    Ok(CertificateReport {
        degree,
        condition: Condition::Hutchinson,
        comparisons,
        minors: vec![],
        verdict,
    })
}

/// Dispatch on a condition.
pub fn check(p: &Polynomial, condition: Condition) -> Result<CertificateReport> {
    match condition {
        Condition::Even => check_even(p),
        Condition::Odd => check_odd(p),
        Condition::Hutchinson => check_hutchinson(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly_core::rational::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_integers(c)
    }

    #[test]
    fn even_examples() {
        let r = check_even(&p(&[1, 1, 1])).unwrap();
        assert_eq!(r.verdict, Verdict::CertifiedPositive);
        assert_eq!(r.comparisons[0].ratio, int(1));
        assert_eq!(r.minors, vec![int(1), rat(3, 4)]);

        let r = check_even(&p(&[1, 2, 2, 2, 1])).unwrap();
        assert_eq!(r.verdict, Verdict::BoundaryCase);
        assert_eq!(r.relations(), vec![Relation::Equal, Relation::Equal]);

        let r = check_even(&p(&[1, 10, 1, 10, 1])).unwrap();
        assert_eq!(r.verdict, Verdict::ConditionFails);
        assert_eq!(r.comparisons[0].ratio, int(100));
    }

    #[test]
    fn mixed_equal_and_below_is_boundary() {
        // n = 1 threshold 4: single ratio; use n = 2 (threshold 2): ratios 2 and 1.
        let r = check_even(&p(&[1, 2, 2, 1, 1])).unwrap();
        assert_eq!(r.relations(), vec![Relation::Equal, Relation::Below]);
        assert_eq!(r.verdict, Verdict::BoundaryCase);
    }

    #[test]
    fn constant_is_trivially_positive() {
        let r = check_even(&p(&[3])).unwrap();
        assert_eq!(r.verdict, Verdict::CertifiedPositive);
        assert!(r.comparisons.is_empty() && r.minors.is_empty());
        assert_eq!(
            check_even(&p(&[-3])).unwrap_err(),
            Error::NonPositiveCoefficient(0)
        );
    }

    #[test]
    fn even_rejects_bad_input() {
        assert_eq!(
            check_even(&p(&[1, 1, 1, 1])).unwrap_err(),
            Error::EvenDegreeRequired(3)
        );
        assert_eq!(
            check_even(&p(&[1, -1, 1])).unwrap_err(),
            Error::NonPositiveCoefficient(1)
        );
    }

    #[test]
    fn odd_examples() {
        let r = check_odd(&p(&[1, 1, 1, 1])).unwrap();
        assert_eq!(r.verdict, Verdict::CertifiedOneRealZero);
        assert_eq!(r.comparisons[0].ratio, int(1));
        let extremal = Polynomial::new(vec![rat(1, 4), rat(3, 4), rat(3, 4), rat(1, 4)]);
        let r = check_odd(&extremal).unwrap();
        assert_eq!(r.verdict, Verdict::BoundaryCase);
        assert_eq!(r.comparisons[0].ratio, int(3));
        assert_eq!(
            check_odd(&p(&[1, 1, 100, 1])).unwrap().verdict,
            Verdict::ConditionFails
        );
        assert_eq!(
            check_odd(&p(&[1, 1, 1])).unwrap_err(),
            Error::OddDegreeRequired(2)
        );
        assert!(check_odd(&p(&[1, 1])).is_err());
    }

    #[test]
    fn hutchinson_examples() {
        assert_eq!(
            check_hutchinson(&p(&[1, 2, 1])).unwrap().verdict,
            Verdict::CertifiedAllRealZeros
        );
        assert_eq!(
            check_hutchinson(&p(&[1, 1, 1])).unwrap().verdict,
            Verdict::ConditionFails
        );
        let r = check_hutchinson(&p(&[1, 4, 8, 8])).unwrap();
        assert_eq!(r.comparisons[0].ratio, int(2));
        assert_eq!(r.comparisons[1].ratio, int(2));
        assert_eq!(r.verdict, Verdict::ConditionFails);
    }

    #[test]
    fn report_json_schema() {
        let r = check_even(&p(&[1, 1, 1])).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["degree"], 2);
        assert_eq!(json["condition"], "Even");
        assert_eq!(json["comparisons"][0]["k"], 0);
        assert_eq!(json["comparisons"][0]["ratio"], "1");
        assert_eq!(json["comparisons"][0]["relation"], "Below");
        assert_eq!(json["minors"], serde_json::json!(["1", "3/4"]));
        assert_eq!(json["verdict"], "CertifiedPositive");
        let back: CertificateReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
    }
}
