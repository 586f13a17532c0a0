//! C ABI for `monogen`.
//!
//! Polynomials and verdicts are opaque handles created and released through
//! this interface. Every fallible call returns a [`MonogenStatus`]; the text of
//! the most recent error on the calling thread is available from
//! [`monogen_last_error`]. Strings returned to the caller are released with
//! [`monogen_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use monogen::arith::{Effort, TriState};
use monogen::density::{bound_linear_family, bound_nminus1_family};
use monogen::monogenic::{certify_generator, theorem_check, Family, MonogenicityVerdict, Outcome};
use monogen::poly::{parse_polynomial, IntPolynomial};
use monogen::Error;
use num_bigint::BigInt;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonogenStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotMonic = 4,
    ZeroDiscriminant = 5,
    Hypothesis = 6,
    IndexOutOfRange = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonogenOutcome {
    Generator = 0,
    NotGenerator = 1,
    Unknown = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonogenTriState {
    False = 0,
    True = 1,
    Unknown = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonogenFamily {
    /// x^5 + ax + b
    QuinticLinear = 0,
    /// x^6 + ax + b
    SexticLinear = 1,
    /// x^5 + cx^4 + d
    QuinticNm1 = 2,
    /// x^6 + cx^5 + d
    SexticNm1 = 3,
}

/// Opaque monic integer polynomial.
pub struct MonogenPolynomial(IntPolynomial);

/// Opaque certification result.
pub struct MonogenVerdict(MonogenicityVerdict);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> MonogenStatus {
    match e {
        Error::Parse { .. } => MonogenStatus::Parse,
        Error::NotMonic => MonogenStatus::NotMonic,
        Error::ZeroDiscriminant => MonogenStatus::ZeroDiscriminant,
        Error::Hypothesis(_) | Error::DegenerateFamily => MonogenStatus::Hypothesis,
        _ => MonogenStatus::Internal,
    }
}

fn fail(status: MonogenStatus, message: impl Into<String>) -> MonogenStatus {
    set_error(message.into());
    status
}

// Runs `body`, mapping library errors and panics to status codes.
fn guard(body: impl FnOnce() -> Result<(), MonogenStatus>) -> MonogenStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => MonogenStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(MonogenStatus::Internal, "panic inside monogen"),
    }
}

fn lib(e: Error) -> MonogenStatus {
    fail(status_of(&e), e.to_string())
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), MonogenStatus> {
    if p.is_null() {
        Err(fail(MonogenStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the last failed call on this thread, or NULL. Owned by the
/// library; valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn monogen_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parse text such as "x^5 + 2x + 2".
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn monogen_polynomial_parse(
    text: *const c_char,
    out: *mut *mut MonogenPolynomial,
) -> MonogenStatus {
    guard(|| {
        non_null(text, "text")?;
        non_null(out, "out")?;
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| fail(MonogenStatus::InvalidUtf8, "text is not UTF-8"))?;
        let f = parse_polynomial(s).map_err(lib)?;
        *out = Box::into_raw(Box::new(MonogenPolynomial(f)));
        Ok(())
    })
}

/// Build a polynomial from `len` coefficients, constant term first.
///
/// # Safety
/// `coeffs` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn monogen_polynomial_from_coeffs(
    coeffs: *const i64,
    len: usize,
    out: *mut *mut MonogenPolynomial,
) -> MonogenStatus {
    guard(|| {
        non_null(coeffs, "coeffs")?;
        non_null(out, "out")?;
        let c = std::slice::from_raw_parts(coeffs, len);
        *out = Box::into_raw(Box::new(MonogenPolynomial(IntPolynomial::from_i64s(c))));
        Ok(())
    })
}

/// The polynomial rendered as text; release with `monogen_string_free`.
///
/// # Safety
/// `poly` must be NULL or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn monogen_polynomial_to_string(poly: *const MonogenPolynomial) -> *mut c_char {
    match poly.as_ref() {
        Some(p) => to_c_string(p.0.render()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `poly` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn monogen_polynomial_free(poly: *mut MonogenPolynomial) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Decide whether a root of `poly` generates the ring of integers.
/// `rho_iterations` of 0 selects the default factoring budget.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn monogen_certify(
    poly: *const MonogenPolynomial,
    rho_iterations: u64,
    out: *mut *mut MonogenVerdict,
) -> MonogenStatus {
    guard(|| {
        non_null(poly, "poly")?;
        non_null(out, "out")?;
        let mut effort = Effort::default();
        if rho_iterations > 0 {
            effort.rho_iterations = rho_iterations;
        }
        let v = certify_generator(&(*poly).0, &effort).map_err(lib)?;
        *out = Box::into_raw(Box::new(MonogenVerdict(v)));
        Ok(())
    })
}

/// # Safety
/// `verdict` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn monogen_verdict_outcome(
    verdict: *const MonogenVerdict,
    out: *mut MonogenOutcome,
) -> MonogenStatus {
    guard(|| {
        non_null(verdict, "verdict")?;
        non_null(out, "out")?;
        *out = match (*verdict).0.outcome {
            Outcome::Generator => MonogenOutcome::Generator,
            Outcome::NotGenerator => MonogenOutcome::NotGenerator,
            Outcome::Unknown => MonogenOutcome::Unknown,
        };
        Ok(())
    })
}

/// # Safety
/// `verdict` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn monogen_verdict_irreducible(
    verdict: *const MonogenVerdict,
    out: *mut bool,
) -> MonogenStatus {
    guard(|| {
        non_null(verdict, "verdict")?;
        non_null(out, "out")?;
        *out = (*verdict).0.irreducible;
        Ok(())
    })
}

/// Number of primes tested.
///
/// # Safety
/// `verdict` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn monogen_verdict_prime_count(verdict: *const MonogenVerdict) -> usize {
    verdict.as_ref().map_or(0, |v| v.0.tested_primes.len())
}

/// The `index`-th tested prime as decimal text, and whether it divides the index.
///
/// # Safety
/// `verdict` must be a live handle; `prime` and `divides` must be writable.
#[no_mangle]
pub unsafe extern "C" fn monogen_verdict_prime(
    verdict: *const MonogenVerdict,
    index: usize,
    prime: *mut *mut c_char,
    divides: *mut bool,
) -> MonogenStatus {
    guard(|| {
        non_null(verdict, "verdict")?;
        non_null(prime, "prime")?;
        non_null(divides, "divides")?;
        let primes = &(*verdict).0.tested_primes;
        let t = primes.get(index).ok_or_else(|| {
            fail(MonogenStatus::IndexOutOfRange, format!("no tested prime at {index}"))
        })?;
        *prime = to_c_string(t.p.to_string());
        *divides = t.divides_index;
        Ok(())
    })
}

/// Discriminant as decimal text; release with `monogen_string_free`.
///
/// # Safety
/// `verdict` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn monogen_verdict_discriminant(verdict: *const MonogenVerdict) -> *mut c_char {
    match verdict.as_ref() {
        Some(v) => to_c_string(v.0.discriminant.to_string()),
        None => ptr::null_mut(),
    }
}

/// The verdict as a JSON record; release with `monogen_string_free`.
///
/// # Safety
/// `verdict` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn monogen_verdict_json(verdict: *const MonogenVerdict) -> *mut c_char {
    match verdict.as_ref() {
        Some(v) => to_c_string(v.0.to_json()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `verdict` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn monogen_verdict_free(verdict: *mut MonogenVerdict) {
    if !verdict.is_null() {
        drop(Box::from_raw(verdict));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn monogen_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Evaluate a family's closed-form criterion at `(x, y)`.
///
/// # Safety
/// `applies` and `monogenic` must be writable.
#[no_mangle]
pub unsafe extern "C" fn monogen_theorem_check(
    family: MonogenFamily,
    x: i64,
    y: i64,
    applies: *mut bool,
    monogenic: *mut MonogenTriState,
) -> MonogenStatus {
    guard(|| {
        non_null(applies, "applies")?;
        non_null(monogenic, "monogenic")?;
        let family = match family {
            MonogenFamily::QuinticLinear => Family::QuinticLinear,
            MonogenFamily::SexticLinear => Family::SexticLinear,
            MonogenFamily::QuinticNm1 => Family::QuinticNM1,
            MonogenFamily::SexticNm1 => Family::SexticNM1,
        };
        let check = theorem_check(family, &BigInt::from(x), &BigInt::from(y), &Effort::default())
            .map_err(lib)?;
        *applies = check.applies;
        *monogenic = match check.monogenic {
            TriState::True => MonogenTriState::True,
            TriState::False => MonogenTriState::False,
            TriState::Unknown => MonogenTriState::Unknown,
        };
        Ok(())
    })
}

/// Density lower bound for `x^n + bx + b`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn monogen_bound_linear_family(n: u64, out: *mut f64) -> MonogenStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = bound_linear_family(n).map_err(lib)?.approx;
        Ok(())
    })
}

/// Density lower bound for `x^n + cx^(n-1) + cd`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn monogen_bound_nminus1_family(n: u64, c: i64, out: *mut f64) -> MonogenStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = bound_nminus1_family(n, &BigInt::from(c)).map_err(lib)?.approx;
        Ok(())
    })
}
