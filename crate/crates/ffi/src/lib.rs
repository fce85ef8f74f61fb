//! C interface to musym.
//!
//! Polynomials and gist results live behind opaque handles. Every call that
//! can fail returns a [`MusymStatus`]; the message for the most recent
//! failure on the calling thread is available from
//! [`musym_last_error_message`]. Strings handed out by the library must be
//! released with [`musym_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use musym::rational::int;
use musym::{compute_gist, Algorithm, BasisKind, Error, GistResult, Partition, Polynomial};

/// Opaque polynomial handle.
pub struct MusymPoly(Polynomial);

/// Opaque gist result handle; may hold a "not μ-symmetric" verdict.
pub struct MusymGist(GistResult);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MusymStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidPartition = 4,
    InvalidArgument = 5,
    Unsupported = 6,
    NotSymmetric = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MusymAlgorithm {
    Groebner = 0,
    CanonizeReduce = 1,
    LinearSystem = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MusymBasis {
    Elementary = 0,
    PowerSum = 1,
    CompleteHomogeneous = 2,
    Monomial = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: MusymStatus, msg: impl Into<String>) -> MusymStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> MusymStatus {
    match e {
        Error::Parse { .. } => MusymStatus::Parse,
        Error::InvalidPartition(_) => MusymStatus::InvalidPartition,
        Error::Unsupported(_) => MusymStatus::Unsupported,
        _ => MusymStatus::InvalidArgument,
    }
}

fn from_error(e: Error) -> MusymStatus {
    fail(status_of(&e), e.to_string())
}

/// Runs `f`, turning a panic into `Internal`.
fn guard(f: impl FnOnce() -> MusymStatus) -> MusymStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == MusymStatus::Ok {
                LAST_ERROR.with(|e| *e.borrow_mut() = None);
            }
            s
        }
        Err(_) => fail(MusymStatus::Internal, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, MusymStatus> {
    if s.is_null() {
        return Err(fail(MusymStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(MusymStatus::InvalidUtf8, "string is not UTF-8"))
}

fn out_string(s: String, out: *mut *mut c_char) -> MusymStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            MusymStatus::Ok
        }
        Err(_) => fail(MusymStatus::Internal, "string contains NUL"),
    }
}

fn algorithm(a: u32) -> Option<Algorithm> {
    match a {
        0 => Some(Algorithm::Groebner),
        1 => Some(Algorithm::CanonizeReduce),
        2 => Some(Algorithm::LinearSystem),
        _ => None,
    }
}

fn basis(b: u32) -> Option<BasisKind> {
    match b {
        0 => Some(BasisKind::Elementary),
        1 => Some(BasisKind::PowerSum),
        2 => Some(BasisKind::CompleteHomogeneous),
        3 => Some(BasisKind::Monomial),
        _ => None,
    }
}

/// Parses polynomial text such as `3*r1^2 + 2*r1*r2`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn musym_poly_parse(text: *const c_char, out: *mut *mut MusymPoly) -> MusymStatus {
    guard(|| {
        if out.is_null() {
            return fail(MusymStatus::NullPointer, "null output pointer");
        }
        let s = match read_str(text) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match s.parse::<Polynomial>() {
            Ok(p) => {
                *out = Box::into_raw(Box::new(MusymPoly(p)));
                MusymStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `p` must come from [`musym_poly_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn musym_poly_free(p: *mut MusymPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Canonical text of a polynomial.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn musym_poly_to_string(p: *const MusymPoly, out: *mut *mut c_char) -> MusymStatus {
    guard(|| {
        if p.is_null() || out.is_null() {
            return fail(MusymStatus::NullPointer, "null argument");
        }
        out_string((*p).0.to_string(), out)
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn musym_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Decides μ-symmetry of `poly` and computes a gist.
///
/// `mu` points to `mu_len` positive parts in non-increasing order; `algo` and
/// `basis` take the values of [`MusymAlgorithm`] and [`MusymBasis`]. A
/// polynomial that is not μ-symmetric still yields `MUSYM_STATUS_OK`; ask
/// [`musym_gist_is_symmetric`].
///
/// # Safety
/// `poly` must be a live handle, `mu` must point to `mu_len` readable values
/// and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn musym_gist(
    poly: *const MusymPoly,
    mu: *const u32,
    mu_len: usize,
    algo: u32,
    basis_kind: u32,
    out: *mut *mut MusymGist,
) -> MusymStatus {
    guard(|| {
        if poly.is_null() || out.is_null() || (mu.is_null() && mu_len > 0) {
            return fail(MusymStatus::NullPointer, "null argument");
        }
        let parts = if mu_len == 0 { Vec::new() } else { std::slice::from_raw_parts(mu, mu_len).to_vec() };
        let mu = match Partition::new(parts) {
            Ok(m) => m,
            Err(e) => return from_error(e),
        };
        let Some(algo) = algorithm(algo) else {
            return fail(MusymStatus::InvalidArgument, format!("unknown algorithm {algo}"));
        };
        let Some(kind) = basis(basis_kind) else {
            return fail(MusymStatus::InvalidArgument, format!("unknown basis {basis_kind}"));
        };
        match compute_gist(&(*poly).0, &mu, kind, algo) {
            Ok(r) => {
                *out = Box::into_raw(Box::new(MusymGist(r)));
                MusymStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// 1 if the result carries a gist, 0 if the input was not μ-symmetric or the
/// handle is null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn musym_gist_is_symmetric(g: *const MusymGist) -> i32 {
    if g.is_null() {
        return 0;
    }
    i32::from((*g).0.is_symmetric())
}

/// Text of the gist polynomial.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn musym_gist_to_string(g: *const MusymGist, out: *mut *mut c_char) -> MusymStatus {
    guard(|| {
        if g.is_null() || out.is_null() {
            return fail(MusymStatus::NullPointer, "null argument");
        }
        match (*g).0.gist() {
            Some(gist) => out_string(gist.to_string(), out),
            None => fail(MusymStatus::NotSymmetric, "polynomial is not mu-symmetric"),
        }
    })
}

/// Evaluates the gist at integer values of z₁..z_n; the exact result is
/// written as `p/q` (or `p` when integral).
///
/// # Safety
/// `g` must be a live handle, `values` must point to `len` readable values
/// and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn musym_gist_eval(
    g: *const MusymGist,
    values: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> MusymStatus {
    guard(|| {
        if g.is_null() || out.is_null() || (values.is_null() && len > 0) {
            return fail(MusymStatus::NullPointer, "null argument");
        }
        let Some(gist) = (*g).0.gist() else {
            return fail(MusymStatus::NotSymmetric, "polynomial is not mu-symmetric");
        };
        let vals: Vec<_> =
            if len == 0 { Vec::new() } else { std::slice::from_raw_parts(values, len).iter().map(|&v| int(v)).collect() };
        match gist.eval(&vals) {
            Ok(v) => out_string(v.to_string(), out),
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `g` must come from [`musym_gist`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn musym_gist_free(g: *mut MusymGist) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn musym_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
