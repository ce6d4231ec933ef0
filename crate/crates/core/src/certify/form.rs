//! The symmetric tridiagonal matrix of the quadratic form
//! `Q_P(x_0..x_n) = sum a_{2k} x_k^2 + sum a_{2k+1} x_k x_{k+1}`.

use std::cmp::Ordering;

use super::scalar::ExactScalar;
use crate::error::{Error, Result};
use crate::poly_core::rational::rat;
use crate::poly_core::{Polynomial, Rational};

/// Largest matrix the exhaustive minor enumeration accepts.
pub const MINOR_ENUMERATION_CAP: usize = 7;

/// Row indices, column indices and the determinant they select.
pub type Minor<S> = (Vec<usize>, Vec<usize>, S);

/// Diagonal `(a_0, a_2, ..., a_{2n})` and off-diagonal
/// `(a_1/2, a_3/2, ..., a_{2n-1}/2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagonalForm<S = Rational> {
    diag: Vec<S>,
    offdiag: Vec<S>,
}

/// Form of an even-degree polynomial with positive coefficients.
pub fn build_form(p: &Polynomial) -> Result<TridiagonalForm> {
    if p.degree() % 2 == 1 {
        return Err(Error::EvenDegreeRequired(p.degree()));
    }
    if p.degree() < 2 {
        return Err(Error::DegreeTooSmall {
            degree: p.degree(),
            minimum: 2,
        });
    }
    build_form_from(p.coeffs())
}

/// Form from an explicit coefficient slice of odd length at least 3.
pub fn build_form_from<S: ExactScalar>(coeffs: &[S]) -> Result<TridiagonalForm<S>> {
    let degree = coeffs.len().saturating_sub(1);
    if coeffs.is_empty() || degree % 2 == 1 {
        return Err(Error::EvenDegreeRequired(degree));
    }
    if let Some(idx) = coeffs.iter().position(|c| !c.is_positive_value()) {
        return Err(Error::NonPositiveCoefficient(idx));
    }
    let half = rat(1, 2);
    Ok(TridiagonalForm {
        diag: coeffs.iter().step_by(2).cloned().collect(),
        offdiag: coeffs
            .iter()
            .skip(1)
            .step_by(2)
            .map(|c| c.scale(&half))
            .collect(),
    })
}

impl<S: ExactScalar> TridiagonalForm<S> {
    pub fn from_parts(diag: Vec<S>, offdiag: Vec<S>) -> Result<Self> {
        if diag.is_empty() || diag.len() != offdiag.len() + 1 {
            return Err(Error::DimensionMismatch {
                expected: offdiag.len() + 1,
                actual: diag.len(),
            });
        }
        let entries = diag.iter().chain(offdiag.iter());
        if let Some(idx) = entries.clone().position(|c| !c.is_positive_value()) {
            let coefficient_index = if idx < diag.len() {
                2 * idx
            } else {
                2 * (idx - diag.len()) + 1
            };
            return Err(Error::NonPositiveCoefficient(coefficient_index));
        }
        Ok(TridiagonalForm { diag, offdiag })
    }

    pub fn diag(&self) -> &[S] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[S] {
        &self.offdiag
    }

    /// Matrix dimension, `n + 1`.
    pub fn size(&self) -> usize {
        self.diag.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> S {
        match i.abs_diff(j) {
            0 => self.diag[i].clone(),
            1 => self.offdiag[i.min(j)].clone(),
            _ => self.diag[0].zero_like(),
        }
    }

    pub fn dense(&self) -> Vec<Vec<S>> {
        (0..self.size())
            .map(|i| (0..self.size()).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// `sum diag[k] v_k^2 + sum 2 offdiag[k] v_k v_{k+1}`.
    pub fn quadratic_form_value(&self, v: &[S]) -> Result<S> {
        if v.len() != self.size() {
            return Err(Error::DimensionMismatch {
                expected: self.size(),
                actual: v.len(),
            });
        }
        let mut total = self.diag[0].zero_like();
        for (d, x) in self.diag.iter().zip(v) {
            total = total.add(&d.mul(&x.mul(x)));
        }
        for (k, e) in self.offdiag.iter().enumerate() {
            total = total.add(&e.scale(&rat(2, 1)).mul(&v[k].mul(&v[k + 1])));
        }
        Ok(total)
    }

    /// `(Delta_1, ..., Delta_{n+1})` from the three-term recurrence
    /// `Delta_j = d_{j-1} Delta_{j-1} - e_{j-2}^2 Delta_{j-2}`.
    pub fn leading_minors(&self) -> Vec<S> {
        let mut minors: Vec<S> = Vec::with_capacity(self.size());
        let one = self.diag[0].one_like();
        for j in 0..self.size() {
            let prev = minors.last().unwrap_or(&one);
            let mut next = self.diag[j].mul(prev);
            if j >= 1 {
                let before = if j >= 2 { &minors[j - 2] } else { &one };
                let e = &self.offdiag[j - 1];
                next = next.sub(&e.mul(e).mul(before));
            }
            minors.push(next);
        }
        minors
    }

    /// Sylvester: positive definite iff every leading minor is positive.
    pub fn is_positive_definite(&self) -> bool {
        self.leading_minors()
            .iter()
            .all(ExactScalar::is_positive_value)
    }

    /// Every minor (all equal-size row/column subsets) is `>= 0`.
    /// Exhaustive, so capped at 7x7.
    pub fn all_minors_nonnegative(&self) -> Result<bool> {
        Ok(self.first_negative_minor()?.is_none())
    }

    /// The `(rows, cols)` of some negative minor, if there is one.
    pub fn first_negative_minor(&self) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        let m = self.size();
        if m > MINOR_ENUMERATION_CAP {
            return Err(Error::MinorCapExceeded(m));
        }
        let dense = self.dense();
        let subsets: Vec<Vec<usize>> = (1u32..(1 << m))
            .map(|mask| (0..m).filter(|i| mask & (1 << i) != 0).collect())
            .collect();
        for rows in &subsets {
            for cols in subsets.iter().filter(|c| c.len() == rows.len()) {
                let sub: Vec<Vec<S>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| dense[i][j].clone()).collect())
                    .collect();
                if determinant(&sub).signum() == Ordering::Less {
                    return Ok(Some((rows.clone(), cols.clone())));
                }
            }
        }
        Ok(None)
    }

    /// All minors with their row/column index sets, for small matrices.
    pub fn minors(&self) -> Result<Vec<Minor<S>>> {
        let m = self.size();
        if m > MINOR_ENUMERATION_CAP {
            return Err(Error::MinorCapExceeded(m));
        }
        let dense = self.dense();
        let subsets: Vec<Vec<usize>> = (1u32..(1 << m))
            .map(|mask| (0..m).filter(|i| mask & (1 << i) != 0).collect())
            .collect();
        let mut out = Vec::new();
        for rows in &subsets {
            for cols in subsets.iter().filter(|c| c.len() == rows.len()) {
                let sub: Vec<Vec<S>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| dense[i][j].clone()).collect())
                    .collect();
                out.push((rows.clone(), cols.clone(), determinant(&sub)));
            }
        }
        Ok(out)
    }
}

/// Laplace expansion along the first row, skipping structurally zero
/// entries. Fine for the sparse, small matrices cut out of a tridiagonal one.
pub fn determinant<S: ExactScalar>(m: &[Vec<S>]) -> S {
    let size = m.len();
    assert!(
        size > 0 && m.iter().all(|r| r.len() == size),
        "square matrix required"
    );
    let cols: Vec<usize> = (0..size).collect();
    laplace(m, 0, &cols)
}

fn laplace<S: ExactScalar>(m: &[Vec<S>], row: usize, cols: &[usize]) -> S {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut total = m[row][cols[0]].zero_like();
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_structural_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.mul(&laplace(m, row + 1, &rest));
        total = if pos % 2 == 0 {
            total.add(&term)
        } else {
            total.sub(&term)
        };
    }
    total
}
