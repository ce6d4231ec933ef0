//! Positivity certificates from coefficient ratios and the tridiagonal
//! quadratic form, with exact threshold comparisons.

mod check;
mod field;
mod form;
mod scalar;
mod threshold;

pub use check::{
    check, check_even, check_even_with, check_even_with_coeffs, check_hutchinson, check_odd,
    check_odd_with, check_odd_with_coeffs, CertificateReport, Comparison, Condition, Verdict,
};
pub use field::AlgebraicNumber;
pub use form::{
    build_form, build_form_from, determinant, Minor, TridiagonalForm, MINOR_ENUMERATION_CAP,
};
pub use scalar::ExactScalar;
pub use threshold::{
    chebyshev_s, chebyshev_v, compare_ratio, odd_index_factor, threshold, AlgebraicThreshold,
    Relation, RootLocation,
};
