//! Exercises the C entry points exactly as a foreign caller would:
//! through raw pointers, checking status codes, and freeing every
//! returned resource.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use stirlingb_ffi::*;

fn own_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let s = unsafe { CStr::from_ptr(ptr) }.to_string_lossy().into_owned();
    unsafe { stb_string_free(ptr) };
    s
}

#[test]
fn q_bracket_roundtrip() {
    let mut poly: *mut StbPoly = ptr::null_mut();
    let status = unsafe { stb_q_bracket(3, &mut poly) };
    assert_eq!(status, StbStatus::Ok);
    assert_eq!(unsafe { stb_poly_degree(poly) }, 2);
    assert_eq!(unsafe { stb_poly_coeff(poly, 0) }, 1);
    assert_eq!(unsafe { stb_poly_coeff(poly, 2) }, 1);
    assert_eq!(unsafe { stb_poly_coeff(poly, 3) }, 0);
    let mut value = 0i64;
    assert_eq!(unsafe { stb_poly_eval_at_one(poly, &mut value) }, StbStatus::Ok);
    assert_eq!(value, 3);
    unsafe { stb_poly_free(poly) };
}

#[test]
fn stirling_entry_points_agree_with_goldens() {
    let mut poly: *mut StbPoly = ptr::null_mut();
    assert_eq!(unsafe { stb_stirling2_q(2, 1, &mut poly) }, StbStatus::Ok);
    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { stb_poly_to_string(poly, &mut text) }, StbStatus::Ok);
    assert_eq!(own_string(text), "2+q+q^2");
    unsafe { stb_poly_free(poly) };

    assert_eq!(unsafe { stb_stirling_b1_q(2, 1, &mut poly) }, StbStatus::Ok);
    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { stb_poly_to_string(poly, &mut text) }, StbStatus::Ok);
    assert_eq!(own_string(text), "3+q");
    unsafe { stb_poly_free(poly) };

    assert_eq!(unsafe { stb_sstirling_b1_q(2, 0, &mut poly) }, StbStatus::Ok);
    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { stb_poly_to_string(poly, &mut text) }, StbStatus::Ok);
    assert_eq!(own_string(text), "1+q+q^2");
    unsafe { stb_poly_free(poly) };

    assert_eq!(unsafe { stb_stirling_b1_q_r(2, 1, 1, &mut poly) }, StbStatus::Ok);
    let mut text: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { stb_poly_to_string(poly, &mut text) }, StbStatus::Ok);
    assert_eq!(own_string(text), "2+q");
    unsafe { stb_poly_free(poly) };
}

#[test]
fn domain_errors_map_to_status() {
    let mut poly: *mut StbPoly = ptr::null_mut();
    assert_eq!(unsafe { stb_stirling2_q(2, 5, &mut poly) }, StbStatus::Domain);
    assert!(poly.is_null());
    // The r-variant is total: out-of-domain cells are the zero polynomial.
    assert_eq!(unsafe { stb_stirling2_q_r(2, 5, 1, &mut poly) }, StbStatus::Ok);
    assert_eq!(unsafe { stb_poly_degree(poly) }, -1);
    unsafe { stb_poly_free(poly) };
}

#[test]
fn null_pointers_are_rejected() {
    assert_eq!(unsafe { stb_q_bracket(2, ptr::null_mut()) }, StbStatus::NullPointer);
    let mut value = 0i64;
    assert_eq!(
        unsafe { stb_poly_eval_at_one(ptr::null(), &mut value) },
        StbStatus::NullPointer
    );
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { stb_perm_stats_json(ptr::null(), &mut out) },
        StbStatus::NullPointer
    );
    unsafe {
        stb_poly_free(ptr::null_mut());
        stb_string_free(ptr::null_mut());
    }
}

#[test]
fn perm_stats_json_golden() {
    let window = CString::new("[-7,-5,8,-9,-4,-6,-1,-3,2]").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { stb_perm_stats_json(window.as_ptr(), &mut out) };
    assert_eq!(status, StbStatus::Ok);
    let json = own_string(out);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["finv"], 27);
    assert_eq!(v["sfinv"], 32);
    assert_eq!(v["ss_inv"], 34);

    let bad = CString::new("[1,1]").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { stb_perm_stats_json(bad.as_ptr(), &mut out) },
        StbStatus::Parse
    );
}

#[test]
fn word_entry_points() {
    let word = CString::new("(1,1)(-2,1)(-3,1)(-2,3)(-2,-2)(-4,1)(1,-2)(-3,2)(-2,-4)").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { stb_word1_stats_json(word.as_ptr(), &mut out) }, StbStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&own_string(out)).unwrap();
    assert_eq!(v["inv_B"], 12);
    assert_eq!(v["k"], 3);

    let word2 = CString::new("1,0,-1,2,-2,2").unwrap();
    let mut exponent = 0u64;
    assert_eq!(unsafe { stb_word2_weight(word2.as_ptr(), &mut exponent) }, StbStatus::Ok);
    assert_eq!(exponent, 8);

    let invalid = CString::new("1,0,-2").unwrap();
    assert_eq!(
        unsafe { stb_word2_weight(invalid.as_ptr(), &mut exponent) },
        StbStatus::InvalidWord
    );
}

#[test]
fn verify_entry_point() {
    let id = CString::new("second-recursion").unwrap();
    let mut all_pass = false;
    let status = unsafe { stb_verify(id.as_ptr(), 4, 3, 2, &mut all_pass) };
    assert_eq!(status, StbStatus::Ok);
    assert!(all_pass);

    let mut out: *mut c_char = ptr::null_mut();
    let status =
        unsafe { stb_verify_json(id.as_ptr(), 3, 3, 1, &mut all_pass, &mut out) };
    assert_eq!(status, StbStatus::Ok);
    assert!(all_pass);
    let reports: serde_json::Value = serde_json::from_str(&own_string(out)).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 4);

    let bogus = CString::new("nope").unwrap();
    assert_eq!(
        unsafe { stb_verify(bogus.as_ptr(), 3, 3, 1, &mut all_pass) },
        StbStatus::UnknownIdentity
    );
}
