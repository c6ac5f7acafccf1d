//! C interface to `spherequot`.
//!
//! Reports are opaque handles created by `sq_describe` and released with
//! `sq_report_free`. Every fallible call returns an `SqStatus`; the message
//! of the most recent failure on the calling thread is available from
//! `sq_last_error_message`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use spherequot::catalog::{canonical_cyclic, Family, GroupSpec};
use spherequot::hj::hj_string;
use spherequot::report::{describe, DescribeOptions, InvariantReport};
use spherequot::Error;

/// Result codes. Nonzero values name the module that failed.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Quaternion = 3,
    Catalog = 4,
    HirzebruchJung = 5,
    Resolution = 6,
    Invariants = 7,
    Report = 8,
    NotApplicable = 9,
    BufferTooSmall = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqFamily {
    Cyclic = 0,
    Dihedral = 1,
    Tetrahedral = 2,
    Octahedral = 3,
    Icosahedral = 4,
    Index2 = 5,
    Index3 = 6,
}

fn family_of(code: i32) -> Option<Family> {
    const CODES: [(SqFamily, Family); 7] = [
        (SqFamily::Cyclic, Family::Cyclic),
        (SqFamily::Dihedral, Family::Dihedral),
        (SqFamily::Tetrahedral, Family::Tetrahedral),
        (SqFamily::Octahedral, Family::Octahedral),
        (SqFamily::Icosahedral, Family::Icosahedral),
        (SqFamily::Index2, Family::Index2),
        (SqFamily::Index3, Family::Index3),
    ];
    CODES.iter().find(|(c, _)| *c as i32 == code).map(|(_, f)| *f)
}

/// Opaque invariant report.
pub struct SqReport {
    inner: InvariantReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> SqStatus {
    match e {
        Error::Quaternion(_) => SqStatus::Quaternion,
        Error::Catalog(_) => SqStatus::Catalog,
        Error::Hj(_) => SqStatus::HirzebruchJung,
        Error::Resolution(_) => SqStatus::Resolution,
        Error::Invariant(_) => SqStatus::Invariants,
        Error::Report(_) => SqStatus::Report,
    }
}

fn fail(status: SqStatus, msg: impl Into<String>) -> SqStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> SqStatus) -> SqStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(SqStatus::Panic, "internal panic"),
    }
}

fn run_describe(spec: Result<GroupSpec, Error>, tolerance: f64, out: *mut *mut SqReport) -> SqStatus {
    if out.is_null() {
        return fail(SqStatus::NullPointer, "out is null");
    }
    if !(tolerance > 0.0 && tolerance <= 1e-3) {
        return fail(SqStatus::InvalidArgument, format!("tolerance {tolerance} outside (0, 1e-3]"));
    }
    let result = spec.and_then(|spec| {
        describe(
            &spec,
            &DescribeOptions {
                tolerance,
                eta: None,
            },
        )
    });
    match result {
        Ok(r) => {
            // SAFETY: checked non-null; caller provides a writable slot.
            unsafe { *out = Box::into_raw(Box::new(SqReport { inner: r })) };
            SqStatus::Ok
        }
        Err(e) => fail(status_of(&e), e.to_string()),
    }
}

/// Builds the report for one spec. `family` is an `SqFamily` value; `a`
/// and `b` are `(q, p)` for the cyclic family, `(m, n)` for dihedral and
/// index2, and `(m, ignored)` otherwise.
///
/// # Safety
/// `out` must be null or point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn sq_describe(
    family: i32,
    a: i64,
    b: i64,
    tolerance: f64,
    out: *mut *mut SqReport,
) -> SqStatus {
    guard(|| {
        let Some(family) = family_of(family) else {
            return fail(SqStatus::InvalidArgument, format!("unknown family code {family}"));
        };
        let spec = match family {
            Family::Cyclic => GroupSpec::from_parts(family, None, None, Some(a), Some(b)),
            Family::Dihedral | Family::Index2 => GroupSpec::from_parts(family, Some(a), Some(b), None, None),
            _ => GroupSpec::from_parts(family, Some(a), None, None, None),
        };
        run_describe(spec.map_err(Error::from), tolerance, out)
    })
}

/// Same as `sq_describe`, with the spec given as text such as `"dihedral:1,2"`.
///
/// # Safety
/// `spec` must be null or a NUL-terminated string; `out` as in `sq_describe`.
#[no_mangle]
pub unsafe extern "C" fn sq_describe_str(spec: *const c_char, tolerance: f64, out: *mut *mut SqReport) -> SqStatus {
    guard(|| {
        if spec.is_null() {
            return fail(SqStatus::NullPointer, "spec is null");
        }
        let Ok(text) = CStr::from_ptr(spec).to_str() else {
            return fail(SqStatus::InvalidArgument, "spec is not UTF-8");
        };
        run_describe(text.parse::<GroupSpec>().map_err(Error::from), tolerance, out)
    })
}

/// # Safety
/// `report` must be null or a handle from `sq_describe` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sq_report_free(report: *mut SqReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

unsafe fn with_report<T>(
    report: *const SqReport,
    out: *mut T,
    f: impl FnOnce(&InvariantReport) -> Option<T>,
) -> SqStatus {
    guard(|| {
        if report.is_null() || out.is_null() {
            return fail(SqStatus::NullPointer, "null argument");
        }
        match f(&(*report).inner) {
            Some(v) => {
                *out = v;
                SqStatus::Ok
            }
            None => fail(SqStatus::NotApplicable, "not defined for cyclic groups"),
        }
    })
}

/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sq_report_order(report: *const SqReport, out: *mut i64) -> SqStatus {
    with_report(report, out, |r| Some(r.order))
}

/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sq_report_k_gamma(report: *const SqReport, out: *mut i64) -> SqStatus {
    with_report(report, out, |r| Some(r.k_gamma))
}

/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sq_report_signature(report: *const SqReport, out: *mut i64) -> SqStatus {
    with_report(report, out, |r| Some(r.signature))
}

/// `SQ_STATUS_NOT_APPLICABLE` for cyclic groups.
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sq_report_b_gamma(report: *const SqReport, out: *mut i64) -> SqStatus {
    with_report(report, out, |r| r.b_gamma)
}

/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sq_report_kappa(report: *const SqReport, out: *mut i64) -> SqStatus {
    with_report(report, out, |r| r.compactification.as_ref().map(|c| c.kappa))
}

/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sq_report_b_prime(report: *const SqReport, out: *mut i64) -> SqStatus {
    with_report(report, out, |r| r.compactification.as_ref().map(|c| c.b_prime))
}

/// Writes 1 when every check passed, 0 otherwise.
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sq_report_all_pass(report: *const SqReport, out: *mut i32) -> SqStatus {
    with_report(report, out, |r| Some(r.all_pass() as i32))
}

/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sq_report_check_count(report: *const SqReport, out: *mut usize) -> SqStatus {
    with_report(report, out, |r| Some(r.checks.len()))
}

/// JSON text of the report. Release with `sq_string_free`; null on failure.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sq_report_to_json(report: *const SqReport) -> *mut c_char {
    let mut result = ptr::null_mut();
    guard(|| {
        if report.is_null() {
            return fail(SqStatus::NullPointer, "report is null");
        }
        match CString::new((*report).inner.to_json()) {
            Ok(s) => {
                result = s.into_raw();
                SqStatus::Ok
            }
            Err(e) => fail(SqStatus::Report, e.to_string()),
        }
    });
    result
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Hirzebruch-Jung string of L(q,p). Writes the length to `len` always and
/// the entries to `buf` when `cap` is large enough; otherwise returns
/// `SQ_STATUS_BUFFER_TOO_SMALL`.
///
/// # Safety
/// `buf` must be null or writable for `cap` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sq_hj_string(q: i64, p: i64, buf: *mut i64, cap: usize, len: *mut usize) -> SqStatus {
    guard(|| {
        if len.is_null() {
            return fail(SqStatus::NullPointer, "len is null");
        }
        if p < 2 {
            return fail(SqStatus::InvalidArgument, format!("p must be at least 2, got {p}"));
        }
        let s = match canonical_cyclic(q, p).map_err(Error::from).and_then(|t| hj_string(t).map_err(Error::from)) {
            Ok(s) => s,
            Err(e) => return fail(status_of(&e), e.to_string()),
        };
        *len = s.entries.len();
        if s.entries.len() > cap || (buf.is_null() && !s.entries.is_empty()) {
            return fail(SqStatus::BufferTooSmall, format!("need {} entries", s.entries.len()));
        }
        ptr::copy_nonoverlapping(s.entries.as_ptr(), buf, s.entries.len());
        SqStatus::Ok
    })
}

/// Message for the last failure on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn sq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
