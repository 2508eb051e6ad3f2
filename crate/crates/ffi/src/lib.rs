//! C ABI for the verification runner.
//!
//! A run is configured with the JSON form of `RunConfig` and yields an opaque
//! report handle. Strings handed out by this library are freed with
//! `sbv_string_free`, reports with `sbv_report_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sugra_bv::runner::{run, Format, RunConfig, RunReport};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SbvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidJson = 3,
    InvalidConfig = 4,
    Internal = 5,
}

/// Report rendering.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SbvFormat {
    Json = 0,
    Text = 1,
}

/// Opaque run report.
pub struct SbvReport {
    inner: RunReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: SbvStatus, msg: impl Into<String>) -> SbvStatus {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
    status
}

fn guarded(f: impl FnOnce() -> SbvStatus) -> SbvStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(SbvStatus::Internal, "panic inside the verification engine"))
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sbv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn sbv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Runs the configuration given as JSON (missing keys take their defaults)
/// and stores a new report in `*out`.
///
/// # Safety
/// `config_json` must be null or a NUL-terminated string; `out` must be null
/// or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sbv_run_json(config_json: *const c_char, out: *mut *mut SbvReport) -> SbvStatus {
    if config_json.is_null() || out.is_null() {
        return fail(SbvStatus::NullPointer, "null argument");
    }
    *out = ptr::null_mut();
    let Ok(text) = CStr::from_ptr(config_json).to_str() else {
        return fail(SbvStatus::InvalidUtf8, "config is not UTF-8");
    };
    let config: RunConfig = match serde_json::from_str(text) {
        Ok(c) => c,
        Err(e) => return fail(SbvStatus::InvalidJson, e.to_string()),
    };
    guarded(|| match run(&config) {
        Ok(report) => {
            *out = Box::into_raw(Box::new(SbvReport { inner: report }));
            SbvStatus::Ok
        }
        Err(e) => fail(SbvStatus::InvalidConfig, e.to_string()),
    })
}

/// Process exit code of the run: 0 when every check passed, 1 otherwise,
/// -1 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle from `sbv_run_json`.
#[no_mangle]
pub unsafe extern "C" fn sbv_report_exit_code(report: *const SbvReport) -> i32 {
    report.as_ref().map_or(-1, |r| r.inner.exit_code())
}

/// Number of checks in the report, 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle from `sbv_run_json`.
#[no_mangle]
pub unsafe extern "C" fn sbv_report_check_count(report: *const SbvReport) -> usize {
    report.as_ref().map_or(0, |r| r.inner.checks.len())
}

/// Number of failing checks, 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle from `sbv_run_json`.
#[no_mangle]
pub unsafe extern "C" fn sbv_report_failure_count(report: *const SbvReport) -> usize {
    report.as_ref().map_or(0, |r| r.inner.failures().count())
}

/// Renders the report; the string in `*out` is freed with `sbv_string_free`.
///
/// # Safety
/// `report` must be null or a live handle; `out` must be null or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn sbv_report_render(report: *const SbvReport, format: SbvFormat, out: *mut *mut c_char) -> SbvStatus {
    let (Some(report), false) = (report.as_ref(), out.is_null()) else {
        return fail(SbvStatus::NullPointer, "null argument");
    };
    let format = match format {
        SbvFormat::Json => Format::Json,
        SbvFormat::Text => Format::Text,
    };
    guarded(|| match CString::new(report.inner.render(format)) {
        Ok(s) => {
            *out = s.into_raw();
            SbvStatus::Ok
        }
        Err(_) => fail(SbvStatus::Internal, "report contains a NUL byte"),
    })
}

/// # Safety
/// `report` must be null or a handle from `sbv_run_json` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sbv_report_free(report: *mut SbvReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sbv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
