//! C ABI for the stirlingb library.
//!
//! Conventions: every entry point returns an [`StbStatus`] code and
//! writes its result through an out pointer. Polynomials are opaque
//! handles released with [`stb_poly_free`]; strings returned by this
//! library are NUL-terminated, heap-allocated, and released with
//! [`stb_string_free`]. Passing a null pointer where a value is required
//! yields `STB_STATUS_NULL_POINTER`; no entry point unwinds across the
//! boundary.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use stirlingb::qpoly::QPoly;
use stirlingb::verify::{run_all, run_identity, VerifyOptions, IDENTITY_IDS};
use stirlingb::{perm_stats, rg1, rg2, Error, RgWord2, RgWordB1, SignedPermutation};

/// Result of every C entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StbStatus {
    Ok = 0,
    /// Arguments outside the mathematical domain of the operation.
    Domain = 1,
    /// A coefficient or evaluation overflowed 64 bits.
    Overflow = 2,
    /// An enumeration exceeded the configured size guard.
    SizeLimit = 3,
    /// Malformed object text.
    Parse = 4,
    /// A restricted-growth condition failed.
    InvalidWord = 5,
    /// Structurally invalid object (e.g. a word that is no image).
    Malformed = 6,
    NullPointer = 7,
    InvalidUtf8 = 8,
    UnknownIdentity = 9,
    /// An internal invariant was violated; never expected.
    Internal = 10,
}

/// Opaque handle to an exact polynomial in `q`.
pub struct StbPoly {
    inner: QPoly,
}

fn status_of(e: &Error) -> StbStatus {
    match e {
        Error::Overflow { .. } => StbStatus::Overflow,
        Error::Domain(_) => StbStatus::Domain,
        Error::SizeLimit { .. } => StbStatus::SizeLimit,
        Error::InvalidWord(_) => StbStatus::InvalidWord,
        Error::Malformed(_) => StbStatus::Malformed,
        Error::Parse(_) => StbStatus::Parse,
    }
}

/// Runs `f`, converting panics into `Internal` instead of unwinding.
fn guarded(f: impl FnOnce() -> StbStatus) -> StbStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(StbStatus::Internal)
}

/// # Safety
/// `out` must be valid for writes.
unsafe fn write_poly(
    out: *mut *mut StbPoly,
    value: stirlingb::Result<QPoly>,
) -> StbStatus {
    if out.is_null() {
        return StbStatus::NullPointer;
    }
    match value {
        Ok(poly) => {
            unsafe { *out = Box::into_raw(Box::new(StbPoly { inner: poly })) };
            StbStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// # Safety
/// `out` must be valid for writes.
unsafe fn write_string(out: *mut *mut c_char, value: String) -> StbStatus {
    if out.is_null() {
        return StbStatus::NullPointer;
    }
    match CString::new(value) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            StbStatus::Ok
        }
        Err(_) => StbStatus::Internal,
    }
}

/// # Safety
/// `text` must be a valid NUL-terminated string or null.
unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, StbStatus> {
    if text.is_null() {
        return Err(StbStatus::NullPointer);
    }
    unsafe { CStr::from_ptr(text) }.to_str().map_err(|_| StbStatus::InvalidUtf8)
}

fn to_usize(v: u64) -> Result<usize, StbStatus> {
    usize::try_from(v).map_err(|_| StbStatus::Domain)
}

/// The q-bracket `[n]_q = 1 + q + ... + q^(n-1)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stb_q_bracket(n: u64, out: *mut *mut StbPoly) -> StbStatus {
    guarded(|| match to_usize(n) {
        Ok(n) => unsafe { write_poly(out, Ok(QPoly::q_bracket(n))) },
        Err(s) => s,
    })
}

/// # Safety
/// `out` must be valid for writes.
unsafe fn triangle_cell(
    n: u64,
    k: u64,
    out: *mut *mut StbPoly,
    compute: impl FnOnce(usize, usize) -> stirlingb::Result<QPoly>,
) -> StbStatus {
    guarded(|| {
        let (n, k) = match (to_usize(n), to_usize(k)) {
            (Ok(n), Ok(k)) => (n, k),
            _ => return StbStatus::Domain,
        };
        unsafe { write_poly(out, compute(n, k)) }
    })
}

/// Second-kind q-Stirling number of type B.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stb_stirling2_q(n: u64, k: u64, out: *mut *mut StbPoly) -> StbStatus {
    unsafe { triangle_cell(n, k, out, rg2::stirling2_q) }
}

/// q,r-variant of the second-kind number; zero outside the r-domain.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stb_stirling2_q_r(
    n: u64,
    k: u64,
    r: u64,
    out: *mut *mut StbPoly,
) -> StbStatus {
    let Ok(r) = to_usize(r) else { return StbStatus::Domain };
    unsafe { triangle_cell(n, k, out, move |n, k| rg2::stirling2_q_r(n, k, r)) }
}

/// Type-A first-kind q-Stirling number.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stb_stirling_a_q(n: u64, k: u64, out: *mut *mut StbPoly) -> StbStatus {
    unsafe { triangle_cell(n, k, out, rg1::stirling_a_q) }
}

/// q,r-variant of the type-A number; zero outside the r-domain.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stb_stirling_a_q_r(
    n: u64,
    k: u64,
    r: u64,
    out: *mut *mut StbPoly,
) -> StbStatus {
    let Ok(r) = to_usize(r) else { return StbStatus::Domain };
    unsafe { triangle_cell(n, k, out, move |n, k| rg1::stirling_a_q_r(n, k, r)) }
}

/// First-kind q-Stirling number of type B.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stb_stirling_b1_q(n: u64, k: u64, out: *mut *mut StbPoly) -> StbStatus {
    unsafe { triangle_cell(n, k, out, rg1::stirling_b1_q) }
}

/// q,r-variant of the first-kind type-B number.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stb_stirling_b1_q_r(
    n: u64,
    k: u64,
    r: u64,
    out: *mut *mut StbPoly,
) -> StbStatus {
    let Ok(r) = to_usize(r) else { return StbStatus::Domain };
    unsafe { triangle_cell(n, k, out, move |n, k| rg1::stirling_b1_q_r(n, k, r)) }
}

/// Shifted first-kind q-Stirling number of type B.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stb_sstirling_b1_q(n: u64, k: u64, out: *mut *mut StbPoly) -> StbStatus {
    unsafe { triangle_cell(n, k, out, rg1::sstirling_b1_q) }
}

/// Degree of the polynomial, or -1 for the zero polynomial or null.
///
/// # Safety
/// `poly` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn stb_poly_degree(poly: *const StbPoly) -> i64 {
    if poly.is_null() {
        return -1;
    }
    match unsafe { &(*poly).inner }.degree() {
        Some(d) => d as i64,
        None => -1,
    }
}

/// Coefficient of `q^d`; zero beyond the degree or for null.
///
/// # Safety
/// `poly` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn stb_poly_coeff(poly: *const StbPoly, d: u64) -> i64 {
    if poly.is_null() {
        return 0;
    }
    match usize::try_from(d) {
        Ok(d) => unsafe { &(*poly).inner }.coeff(d),
        Err(_) => 0,
    }
}

/// Value at `q = 1` (the checked coefficient sum).
///
/// # Safety
/// `poly` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stb_poly_eval_at_one(poly: *const StbPoly, out: *mut i64) -> StbStatus {
    guarded(|| {
        if poly.is_null() || out.is_null() {
            return StbStatus::NullPointer;
        }
        match unsafe { &(*poly).inner }.eval_at_one() {
            Ok(v) => {
                unsafe { *out = v };
                StbStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Canonical text form, e.g. "2+q+q^2". Free with `stb_string_free`.
///
/// # Safety
/// `poly` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stb_poly_to_string(
    poly: *const StbPoly,
    out: *mut *mut c_char,
) -> StbStatus {
    guarded(|| {
        if poly.is_null() {
            return StbStatus::NullPointer;
        }
        unsafe { write_string(out, (*poly).inner.to_string()) }
    })
}

/// Releases a polynomial handle. Null is a no-op.
///
/// # Safety
/// `poly` must have come from this library and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn stb_poly_free(poly: *mut StbPoly) {
    if !poly.is_null() {
        drop(unsafe { Box::from_raw(poly) });
    }
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must have come from this library and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn stb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// All statistics of a signed permutation given in window text form
/// (e.g. "[-3,2,-1,5,-4]"), as a JSON object.
///
/// # Safety
/// `window` must be a valid NUL-terminated string; `out_json` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stb_perm_stats_json(
    window: *const c_char,
    out_json: *mut *mut c_char,
) -> StbStatus {
    guarded(|| {
        let text = match unsafe { read_str(window) } {
            Ok(t) => t,
            Err(s) => return s,
        };
        let perm: SignedPermutation = match text.parse() {
            Ok(p) => p,
            Err(e) => return status_of(&e),
        };
        let json = match serde_json::to_string(&perm_stats(&perm)) {
            Ok(j) => j,
            Err(_) => return StbStatus::Internal,
        };
        unsafe { write_string(out_json, json) }
    })
}

/// Statistics of a first-kind type-B word given in text form
/// (e.g. "(1,1)(-2,1)"), as a JSON object.
///
/// # Safety
/// `word` must be a valid NUL-terminated string; `out_json` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stb_word1_stats_json(
    word: *const c_char,
    out_json: *mut *mut c_char,
) -> StbStatus {
    guarded(|| {
        let text = match unsafe { read_str(word) } {
            Ok(t) => t,
            Err(s) => return s,
        };
        let parsed: RgWordB1 = match text.parse() {
            Ok(w) => w,
            Err(e) => return status_of(&e),
        };
        let json = match serde_json::to_string(&rg1::first_kind_stats(&parsed)) {
            Ok(j) => j,
            Err(_) => return StbStatus::Internal,
        };
        unsafe { write_string(out_json, json) }
    })
}

/// Weight exponent of a second-kind word given in text form
/// (e.g. "1,0,-1,2,-2,2").
///
/// # Safety
/// `word` must be a valid NUL-terminated string; `out_exponent` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stb_word2_weight(
    word: *const c_char,
    out_exponent: *mut u64,
) -> StbStatus {
    guarded(|| {
        if out_exponent.is_null() {
            return StbStatus::NullPointer;
        }
        let text = match unsafe { read_str(word) } {
            Ok(t) => t,
            Err(s) => return s,
        };
        let parsed: RgWord2 = match text.parse() {
            Ok(w) => w,
            Err(e) => return status_of(&e),
        };
        unsafe { *out_exponent = parsed.weight_exponent() };
        StbStatus::Ok
    })
}

/// Runs one identity (or "all") and reports whether every check passed.
///
/// # Safety
/// `identity` must be a valid NUL-terminated string; `out_all_pass` must
/// be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stb_verify(
    identity: *const c_char,
    max_n: u64,
    max_m: u64,
    jobs: u64,
    out_all_pass: *mut bool,
) -> StbStatus {
    unsafe { verify_impl(identity, max_n, max_m, jobs, out_all_pass, std::ptr::null_mut()) }
}

/// Like `stb_verify`, but also returns the full report stream as a JSON
/// array. Free the string with `stb_string_free`.
///
/// # Safety
/// `identity` must be a valid NUL-terminated string; `out_all_pass` and
/// `out_json` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stb_verify_json(
    identity: *const c_char,
    max_n: u64,
    max_m: u64,
    jobs: u64,
    out_all_pass: *mut bool,
    out_json: *mut *mut c_char,
) -> StbStatus {
    if out_json.is_null() {
        return StbStatus::NullPointer;
    }
    unsafe { verify_impl(identity, max_n, max_m, jobs, out_all_pass, out_json) }
}

unsafe fn verify_impl(
    identity: *const c_char,
    max_n: u64,
    max_m: u64,
    jobs: u64,
    out_all_pass: *mut bool,
    out_json: *mut *mut c_char,
) -> StbStatus {
    guarded(|| {
        if out_all_pass.is_null() {
            return StbStatus::NullPointer;
        }
        let id = match unsafe { read_str(identity) } {
            Ok(t) => t,
            Err(s) => return s,
        };
        if id != "all" && !IDENTITY_IDS.contains(&id) {
            return StbStatus::UnknownIdentity;
        }
        let opts = VerifyOptions {
            max_n: match to_usize(max_n) {
                Ok(v) => v,
                Err(s) => return s,
            },
            max_m: match to_usize(max_m) {
                Ok(v) => v,
                Err(s) => return s,
            },
            jobs: match to_usize(jobs) {
                Ok(v) => v.max(1),
                Err(s) => return s,
            },
        };
        let reports = match if id == "all" { run_all(&opts) } else { run_identity(id, &opts) } {
            Ok(r) => r,
            Err(e) => return status_of(&e),
        };
        unsafe { *out_all_pass = reports.iter().all(|r| r.passed()) };
        if !out_json.is_null() {
            let json = match serde_json::to_string(&reports) {
                Ok(j) => j,
                Err(_) => return StbStatus::Internal,
            };
            return unsafe { write_string(out_json, json) };
        }
        StbStatus::Ok
    })
}
