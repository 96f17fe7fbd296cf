//! C interface to `linesym`.
//!
//! Objects are opaque handles created by `ls_*_parse` or `ls_pipeline_run` and released with
//! the matching `ls_*_free`. Every fallible call returns an [`LsStatus`]; on failure the
//! message is available from [`ls_last_error_message`] until the next call on the same thread.
//! Strings returned through out-parameters are owned by the caller and released with
//! [`ls_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use linesym::combinatorics::{automorphism_group, parse_config_table, ConfigTable, Permutation};
use linesym::corpus::list_cases;
use linesym::geometry::{parse_arrangement, Arrangement};
use linesym::render::{render_svg, RenderOptions};
use linesym::witness::{run_case, verify_reflection, MapKind, PipelineReport, Status};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LsStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Witness = 4,
    UnknownCase = 5,
    Render = 6,
    OutOfRange = 7,
    Panic = 8,
}

/// Pipeline outcome of a case.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LsOutcome {
    Success = 0,
    Failure = 1,
    Inapplicable = 2,
}

/// A parsed configuration table.
pub struct LsTable {
    inner: ConfigTable,
}

/// A parsed arrangement.
pub struct LsArrangement {
    inner: Arrangement,
}

/// The result of the symmetry search on one shipped case.
pub struct LsReport {
    inner: PipelineReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Failure(LsStatus, String);

impl Failure {
    fn new(status: LsStatus, e: impl std::fmt::Display) -> Self {
        Failure(status, e.to_string())
    }
}

/// Runs `body`, recording any failure or panic as the last error.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> LsStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => LsStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LsStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(LsStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure::new(LsStatus::InvalidUtf8, e))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::new(LsStatus::NullArgument, "null handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(LsStatus::NullArgument, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|e| Failure::new(LsStatus::Parse, e))
}

/// Message of the last failed call on this thread, or null. Valid until the next call.
#[no_mangle]
pub extern "C" fn ls_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string produced by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ls_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a configuration table in `.cfg` format.
///
/// # Safety
/// `source` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_table_parse(source: *const c_char, out: *mut *mut LsTable) -> LsStatus {
    guard(|| {
        let inner = parse_config_table(text(source)?).map_err(|e| Failure::new(LsStatus::Parse, e))?;
        write_out(out, Box::into_raw(Box::new(LsTable { inner })))
    })
}

/// # Safety
/// `t` must be null or a live table handle.
#[no_mangle]
pub unsafe extern "C" fn ls_table_free(t: *mut LsTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of lines of the table.
///
/// # Safety
/// `t` must be a live table handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_table_line_count(t: *const LsTable, out: *mut usize) -> LsStatus {
    guard(|| write_out(out, handle(t)?.inner.n()))
}

/// Order of the lattice automorphism group of the table.
///
/// # Safety
/// `t` must be a live table handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_table_aut_order(t: *const LsTable, out: *mut usize) -> LsStatus {
    guard(|| write_out(out, automorphism_group(&handle(t)?.inner).order()))
}

/// Parses an arrangement in `.arr` format.
///
/// # Safety
/// `source` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_arrangement_parse(source: *const c_char, out: *mut *mut LsArrangement) -> LsStatus {
    guard(|| {
        let inner = parse_arrangement(text(source)?).map_err(|e| Failure::new(LsStatus::Parse, e))?;
        write_out(out, Box::into_raw(Box::new(LsArrangement { inner })))
    })
}

/// # Safety
/// `a` must be null or a live arrangement handle.
#[no_mangle]
pub unsafe extern "C" fn ls_arrangement_free(a: *mut LsArrangement) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Number of lines of the arrangement.
///
/// # Safety
/// `a` must be a live arrangement handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_arrangement_line_count(a: *const LsArrangement, out: *mut usize) -> LsStatus {
    guard(|| write_out(out, handle(a)?.inner.n()))
}

/// Checks that swapping x and y (then conjugating, if `conjugate`) sends line `i` of `plus`
/// to line `σ(i)` of `minus` for every `i`. `sigma` is in cycle notation.
///
/// # Safety
/// Handles must be live, `sigma` NUL-terminated and `verified` writable.
#[no_mangle]
pub unsafe extern "C" fn ls_verify_reflection(
    plus: *const LsArrangement,
    minus: *const LsArrangement,
    sigma: *const c_char,
    conjugate: bool,
    verified: *mut bool,
) -> LsStatus {
    guard(|| {
        let (plus, minus) = (&handle(plus)?.inner, &handle(minus)?.inner);
        let sigma = Permutation::parse_cycles(text(sigma)?, plus.n()).map_err(|e| Failure::new(LsStatus::Parse, e))?;
        let w = verify_reflection(plus, minus, &sigma, MapKind { swap: true, conjugate })
            .map_err(|e| Failure::new(LsStatus::Witness, e))?;
        write_out(verified, w.verified)
    })
}

/// Renders the real affine part as SVG. `infinity` is the 1-based line sent to infinity,
/// or 0 to keep `z = 0` at infinity.
///
/// # Safety
/// `a` must be a live arrangement handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_render_svg(a: *const LsArrangement, infinity: usize, out: *mut *mut c_char) -> LsStatus {
    guard(|| {
        let opts = RenderOptions {
            infinity: (infinity != 0).then_some(infinity),
            ..RenderOptions::default()
        };
        let svg = render_svg(&handle(a)?.inner, &opts).map_err(|e| Failure::new(LsStatus::Render, e))?;
        write_out(out, owned_string(svg)?)
    })
}

/// Number of shipped cases.
#[no_mangle]
pub extern "C" fn ls_case_count() -> usize {
    list_cases().len()
}

/// Name of shipped case `index` (0-based), as a caller-owned string.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_case_name(index: usize, out: *mut *mut c_char) -> LsStatus {
    guard(|| {
        let name = list_cases()
            .get(index)
            .copied()
            .ok_or_else(|| Failure::new(LsStatus::OutOfRange, format!("no case {}", index)))?;
        write_out(out, owned_string(name.to_string())?)
    })
}

/// Runs the symmetry search on a shipped case.
///
/// # Safety
/// `case_name` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_pipeline_run(case_name: *const c_char, out: *mut *mut LsReport) -> LsStatus {
    guard(|| {
        let inner = run_case(text(case_name)?).map_err(|e| match e {
            linesym::witness::WitnessError::Corpus(e) => Failure::new(LsStatus::UnknownCase, e),
            e => Failure::new(LsStatus::Witness, e),
        })?;
        write_out(out, Box::into_raw(Box::new(LsReport { inner })))
    })
}

/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn ls_report_free(r: *mut LsReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a live report handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_report_outcome(r: *const LsReport, out: *mut LsOutcome) -> LsStatus {
    guard(|| {
        let outcome = match handle(r)?.inner.status {
            Status::Success => LsOutcome::Success,
            Status::Failure => LsOutcome::Failure,
            Status::Inapplicable => LsOutcome::Inapplicable,
        };
        write_out(out, outcome)
    })
}

/// # Safety
/// `r` must be a live report handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_report_aut_order(r: *const LsReport, out: *mut usize) -> LsStatus {
    guard(|| write_out(out, handle(r)?.inner.aut_order))
}

/// The whole report as JSON, as a caller-owned string.
///
/// # Safety
/// `r` must be a live report handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_report_json(r: *const LsReport, out: *mut *mut c_char) -> LsStatus {
    guard(|| {
        let json = serde_json::to_string(&handle(r)?.inner).map_err(|e| Failure::new(LsStatus::Witness, e))?;
        write_out(out, owned_string(json)?)
    })
}
