//! C interface to `polycert`.
//!
//! Every fallible function returns a [`PcStatus`]; results come back
//! through out-pointers, which are written only on `PC_STATUS_OK`. Objects
//! are opaque handles released with their `*_free` function. Strings handed
//! out by the library are NUL-terminated UTF-8 and must be released with
//! [`pc_string_free`]. After a failure, [`pc_last_error_message`] describes
//! it; the message belongs to the calling thread and stays valid until that
//! thread's next call into the library.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use polycert::certify::{self, CertificateReport, Condition, Verdict};
use polycert::extremal::{even_extremal, odd_extremal, Extremal, ExtremalMode};
use polycert::root_oracle;

/// A polynomial with exact rational coefficients.
pub struct PcPolynomial(polycert::Polynomial);

/// The result of a ratio check.
pub struct PcReport(CertificateReport);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    /// Input outside a function's domain: wrong parity, nonpositive
    /// coefficient, bad `n` or precision.
    InvalidInput = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PcCondition {
    Even = 0,
    Odd = 1,
    Hutchinson = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PcVerdict {
    CertifiedPositive = 0,
    CertifiedOneRealZero = 1,
    CertifiedAllRealZeros = 2,
    ConditionFails = 3,
    BoundaryCase = 4,
}

impl From<Verdict> for PcVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::CertifiedPositive => PcVerdict::CertifiedPositive,
            Verdict::CertifiedOneRealZero => PcVerdict::CertifiedOneRealZero,
            Verdict::CertifiedAllRealZeros => PcVerdict::CertifiedAllRealZeros,
            Verdict::ConditionFails => PcVerdict::ConditionFails,
            Verdict::BoundaryCase => PcVerdict::BoundaryCase,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(PcStatus, String);

impl From<polycert::Error> for Failure {
    fn from(e: polycert::Error) -> Self {
        let status = match e {
            polycert::Error::Parse(_) => PcStatus::ParseError,
            polycert::Error::Internal(_) => PcStatus::Internal,
            _ => PcStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

/// Runs `body`, turning errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> PcStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PcStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PcStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(PcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("no interior NUL in library output")
        .into_raw()
}

/// Parses `"1, 3/2, 1"` (constant term first).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_polynomial_parse(
    text: *const c_char,
    out: *mut *mut PcPolynomial,
) -> PcStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(PcStatus::InvalidUtf8, e.to_string()))?;
        let p = polycert::parse_polynomial(text)
            .map_err(|e| Failure(PcStatus::ParseError, e.to_string()))?;
        write(out, Box::into_raw(Box::new(PcPolynomial(p))), "out")
    })
}

/// # Safety
/// `p` must come from [`pc_polynomial_parse`] and not be used afterwards.
/// Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn pc_polynomial_free(p: *mut PcPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_polynomial_degree(p: *const PcPolynomial, out: *mut usize) -> PcStatus {
    guard(|| write(out, borrow(p, "polynomial")?.0.degree(), "out"))
}

/// Canonical text form; release with [`pc_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_polynomial_to_string(
    p: *const PcPolynomial,
    out: *mut *mut c_char,
) -> PcStatus {
    guard(|| {
        let text = polycert::serialize_polynomial(&borrow(p, "polynomial")?.0);
        write(out, into_c_string(text), "out")
    })
}

/// Runs one ratio condition.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_check(
    p: *const PcPolynomial,
    condition: PcCondition,
    out: *mut *mut PcReport,
) -> PcStatus {
    guard(|| {
        let p = &borrow(p, "polynomial")?.0;
        let condition = match condition {
            PcCondition::Even => Condition::Even,
            PcCondition::Odd => Condition::Odd,
            PcCondition::Hutchinson => Condition::Hutchinson,
        };
        let report = certify::check(p, condition)?;
        write(out, Box::into_raw(Box::new(PcReport(report))), "out")
    })
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_report_verdict(r: *const PcReport, out: *mut PcVerdict) -> PcStatus {
    guard(|| write(out, borrow(r, "report")?.0.verdict.into(), "out"))
}

/// The report as JSON; rationals are `"p/q"` strings.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_report_to_json(r: *const PcReport, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        let json = serde_json::to_string(&borrow(r, "report")?.0)
            .map_err(|e| Failure(PcStatus::Internal, e.to_string()))?;
        write(out, into_c_string(json), "out")
    })
}

/// # Safety
/// `r` must come from [`pc_check`] and not be used afterwards. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn pc_report_free(r: *mut PcReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Exact real-root counts.
///
/// # Safety
/// `p` must be a live handle; both out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_count_real_roots(
    p: *const PcPolynomial,
    distinct: *mut usize,
    with_multiplicity: *mut usize,
) -> PcStatus {
    guard(|| {
        if distinct.is_null() || with_multiplicity.is_null() {
            return Err(null("out"));
        }
        let count = root_oracle::count_real_roots(&borrow(p, "polynomial")?.0)?;
        distinct.write(count.distinct);
        with_multiplicity.write(count.with_multiplicity);
        Ok(())
    })
}

/// Whether an even-degree polynomial with positive leading coefficient is
/// positive on the whole real line.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_verify_positive(p: *const PcPolynomial, out: *mut bool) -> PcStatus {
    guard(|| {
        let positive = root_oracle::verify_positive(&borrow(p, "polynomial")?.0)?;
        write(out, positive, "out")
    })
}

/// Coefficients of the boundary polynomial for `n` (degree `2n`, or
/// `2n + 1` when `odd`), comma-separated. Exact fractions when every
/// coefficient is rational, otherwise decimals with `precision` digits.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_extremal_coefficients(
    n: usize,
    odd: bool,
    precision: u32,
    out: *mut *mut c_char,
) -> PcStatus {
    guard(|| {
        let exact: Box<dyn Extremal> = if odd {
            Box::new(odd_extremal(n, ExtremalMode::Exact)?)
        } else {
            Box::new(even_extremal(n, ExtremalMode::Exact)?)
        };
        let text = match exact.rational_coefficients() {
            Some(q) => q
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", "),
            None if odd => odd_extremal(n, ExtremalMode::Numeric(precision))?.numeric_text(),
            None => even_extremal(n, ExtremalMode::Numeric(precision))?.numeric_text(),
        };
        write(out, into_c_string(text), "out")
    })
}

/// Exact description of the even-degree threshold for degree `2n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_threshold_describe(n: usize, out: *mut *mut c_char) -> PcStatus {
    guard(|| write(out, into_c_string(certify::threshold(n)?.describe()), "out"))
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn pc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the calling thread's most recent failure; empty after a
/// success. Never null.
#[no_mangle]
pub extern "C" fn pc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn pc_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}
