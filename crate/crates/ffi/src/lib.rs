//! C ABI over `forestpoly`.
//!
//! Polynomials and graphs cross the boundary as opaque handles
//! (`FpPoly *`, `FpGraph *`) owned by the caller and released with
//! `fp_poly_free` / `fp_graph_free`. Strings returned to C are
//! NUL-terminated, heap-allocated by Rust, and must be released with
//! `fp_string_free`. Every fallible call returns an `FpStatus`; on failure
//! `fp_last_error` describes the problem for the current thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use forestpoly::closedforms;
use forestpoly::cli::GraphFile;
use forestpoly::graph::{build_oriented_sunlet, build_sunlet, WeightedGraph};
use forestpoly::lintree::{forest_sum, oriented_forest_sum};
use forestpoly::oracle::{enumerate_oriented_rsf, enumerate_rsf};
use forestpoly::verify::run_suite;
use forestpoly::{Error, IntPoly};

/// Result codes shared by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    DivisionError = 4,
    DomainError = 5,
    IndexError = 6,
    CapExceeded = 7,
    VerifyFailed = 8,
    Panic = 9,
}

/// Opaque polynomial handle.
pub struct FpPoly(IntPoly);

/// Opaque graph handle.
pub struct FpGraph(WeightedGraph);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: FpStatus, msg: impl Into<String>) -> FpStatus {
    set_error(msg);
    status
}

fn status_of(err: &Error) -> FpStatus {
    match err {
        Error::Domain(_) => FpStatus::DomainError,
        Error::Index { .. } => FpStatus::IndexError,
        Error::CapExceeded { .. } => FpStatus::CapExceeded,
        Error::Parse(_) => FpStatus::ParseError,
        Error::Division(_) => FpStatus::DivisionError,
    }
}

/// Runs `f`, turning panics into `FpStatus::Panic`.
fn guard(f: impl FnOnce() -> FpStatus) -> FpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            fail(FpStatus::Panic, msg)
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, FpStatus> {
    if s.is_null() {
        return Err(fail(FpStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| fail(FpStatus::InvalidUtf8, e.to_string()))
}

unsafe fn poly_ref<'a>(p: *const FpPoly) -> Result<&'a IntPoly, FpStatus> {
    p.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(FpStatus::NullPointer, "null polynomial handle"))
}

unsafe fn graph_ref<'a>(g: *const FpGraph) -> Result<&'a WeightedGraph, FpStatus> {
    g.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(FpStatus::NullPointer, "null graph handle"))
}

unsafe fn emit_poly(out: *mut *mut FpPoly, p: IntPoly) -> FpStatus {
    if out.is_null() {
        return fail(FpStatus::NullPointer, "null output pointer");
    }
    *out = Box::into_raw(Box::new(FpPoly(p)));
    FpStatus::Ok
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Message for the last failed call on this thread. The pointer stays valid
/// until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn fp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses polynomial text such as `"x^2 + 4*x"`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn fp_poly_parse(text: *const c_char, out: *mut *mut FpPoly) -> FpStatus {
    guard(|| {
        let text = tri!(read_str(text));
        match forestpoly::parse_poly(text) {
            Ok(p) => emit_poly(out, p),
            Err(e) => fail(FpStatus::ParseError, e.to_string()),
        }
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fp_poly_free(p: *mut FpPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Canonical text of `p`; free with `fp_string_free`. NULL on bad input.
///
/// # Safety
/// `p` must be a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn fp_poly_to_string(p: *const FpPoly) -> *mut c_char {
    match poly_ref(p) {
        Ok(p) => into_c_string(p.to_string()),
        Err(_) => ptr::null_mut(),
    }
}

/// Degree of `p`, or -1 for the zero polynomial and for NULL.
///
/// # Safety
/// `p` must be NULL or a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn fp_poly_degree(p: *const FpPoly) -> i64 {
    match poly_ref(p).ok().and_then(|p| p.degree().finite()) {
        Some(d) => d as i64,
        None => -1,
    }
}

/// Decimal text of the coefficient of `x^k`; free with `fp_string_free`.
///
/// # Safety
/// `p` must be a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn fp_poly_coeff(p: *const FpPoly, k: usize) -> *mut c_char {
    match poly_ref(p) {
        Ok(p) => into_c_string(p.coeff(k).to_string()),
        Err(_) => ptr::null_mut(),
    }
}

/// Two-variable homogeneous form of degree `n` in `a` and `b`.
///
/// # Safety
/// `p` must be a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn fp_poly_homogenize(p: *const FpPoly, n: usize) -> *mut c_char {
    let Ok(p) = poly_ref(p) else {
        return ptr::null_mut();
    };
    if p.degree().finite().is_some_and(|d| d > n) {
        set_error(format!("degree {} exceeds {n}", p.degree()));
        return ptr::null_mut();
    }
    into_c_string(p.homogenize(n, "a", "b"))
}

/// 1 if `p == q`, 0 otherwise (also 0 if either is NULL).
///
/// # Safety
/// `p`, `q` must be NULL or live polynomial handles.
#[no_mangle]
pub unsafe extern "C" fn fp_poly_equal(p: *const FpPoly, q: *const FpPoly) -> bool {
    matches!((poly_ref(p), poly_ref(q)), (Ok(a), Ok(b)) if a == b)
}

unsafe fn binary(
    p: *const FpPoly,
    q: *const FpPoly,
    out: *mut *mut FpPoly,
    op: impl FnOnce(&IntPoly, &IntPoly) -> Result<IntPoly, FpStatus>,
) -> FpStatus {
    guard(|| {
        let (p, q) = (tri!(poly_ref(p)), tri!(poly_ref(q)));
        let r = tri!(op(p, q));
        emit_poly(out, r)
    })
}

/// # Safety
/// `p`, `q` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_poly_add(p: *const FpPoly, q: *const FpPoly, out: *mut *mut FpPoly) -> FpStatus {
    binary(p, q, out, |a, b| Ok(a + b))
}

/// # Safety
/// `p`, `q` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_poly_mul(p: *const FpPoly, q: *const FpPoly, out: *mut *mut FpPoly) -> FpStatus {
    binary(p, q, out, |a, b| Ok(a * b))
}

/// `p(q(x))`.
///
/// # Safety
/// `p`, `q` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_poly_compose(p: *const FpPoly, q: *const FpPoly, out: *mut *mut FpPoly) -> FpStatus {
    binary(p, q, out, |a, b| Ok(a.compose(b)))
}

/// Exact quotient `p / d` over the integers; `FP_STATUS_DIVISION_ERROR`
/// when `d` does not divide `p`, `FP_STATUS_DOMAIN_ERROR` when `d` is zero.
///
/// # Safety
/// `p`, `d` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_poly_exact_div(p: *const FpPoly, d: *const FpPoly, out: *mut *mut FpPoly) -> FpStatus {
    binary(p, d, out, |p, d| {
        if d.is_zero() {
            return Err(fail(FpStatus::DomainError, "division by the zero polynomial"));
        }
        p.exact_div(d)
            .map_err(|e| fail(FpStatus::DivisionError, e.to_string()))
    })
}

/// Writes whether `d` divides `p`.
///
/// # Safety
/// `d`, `p` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_poly_divides(d: *const FpPoly, p: *const FpPoly, out: *mut bool) -> FpStatus {
    guard(|| {
        let (d, p) = (tri!(poly_ref(d)), tri!(poly_ref(p)));
        if out.is_null() {
            return fail(FpStatus::NullPointer, "null output pointer");
        }
        if d.is_zero() {
            return fail(FpStatus::DomainError, "division by the zero polynomial");
        }
        *out = d.divides(p);
        FpStatus::Ok
    })
}

/// Named polynomial families for `fp_family_poly`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FpFamily {
    /// `F_n(x)` from the Chebyshev recurrence.
    Forest = 0,
    /// `(x+1)^n - 1`.
    OrientedForest = 1,
    /// `c_n(x) prod Psi_k(x+2)^2`, expanded.
    FactoredForest = 2,
    /// `prod Phi_k(x+1)`, expanded.
    FactoredOrientedForest = 3,
    Chebyshev = 4,
    Cyclotomic = 5,
    Psi = 6,
}

/// Builds the `n`-th member of `family` (`n >= 1`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_family_poly(family: FpFamily, n: u32, out: *mut *mut FpPoly) -> FpStatus {
    guard(|| {
        if n == 0 {
            return fail(FpStatus::DomainError, "n must be at least 1");
        }
        let p = match family {
            FpFamily::Forest => closedforms::forest_poly(n),
            FpFamily::OrientedForest => closedforms::oriented_forest_poly(n),
            FpFamily::FactoredForest => closedforms::factored_forest_poly(n),
            FpFamily::FactoredOrientedForest => closedforms::factored_oriented_poly(n),
            FpFamily::Chebyshev => closedforms::chebyshev_t(n),
            FpFamily::Cyclotomic => closedforms::cyclotomic(n),
            FpFamily::Psi => closedforms::psi(n),
        };
        emit_poly(out, p)
    })
}

/// Loads a graph from JSON text in the graph-file schema.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_graph_from_json(json: *const c_char, out: *mut *mut FpGraph) -> FpStatus {
    guard(|| {
        let text = tri!(read_str(json));
        if out.is_null() {
            return fail(FpStatus::NullPointer, "null output pointer");
        }
        let graph = match GraphFile::parse(text).and_then(|f| f.to_graph(false)) {
            Ok(g) => g,
            Err(forestpoly::cli::GraphFileError::Graph(e)) => return fail(status_of(&e), e.to_string()),
            Err(e) => return fail(FpStatus::ParseError, e.to_string()),
        };
        *out = Box::into_raw(Box::new(FpGraph(graph)));
        FpStatus::Ok
    })
}

/// The cycle with `n >= 3` pendant edges, pendant weight `a`, cycle weight `b`.
///
/// # Safety
/// `a`, `b` must be live polynomial handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_graph_sunlet(
    n: usize,
    oriented: bool,
    a: *const FpPoly,
    b: *const FpPoly,
    out: *mut *mut FpGraph,
) -> FpStatus {
    guard(|| {
        let (a, b) = (tri!(poly_ref(a)), tri!(poly_ref(b)));
        if out.is_null() {
            return fail(FpStatus::NullPointer, "null output pointer");
        }
        let built = if oriented {
            build_oriented_sunlet(n, a, b)
        } else {
            build_sunlet(n, a, b)
        };
        match built {
            Ok(g) => {
                *out = Box::into_raw(Box::new(FpGraph(g)));
                FpStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fp_graph_free(g: *mut FpGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Forest sum through the determinant pipeline, oriented or not according
/// to the graph.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_graph_forest_sum(g: *const FpGraph, out: *mut *mut FpPoly) -> FpStatus {
    guard(|| {
        let g = tri!(graph_ref(g));
        let r = if g.is_oriented() {
            oriented_forest_sum(g)
        } else {
            forest_sum(g)
        };
        match r {
            Ok(p) => emit_poly(out, p),
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Brute-force forest sum; `out_count` (optional) receives the number of
/// forests.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable; `out_count`
/// must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn fp_graph_enumerate(
    g: *const FpGraph,
    cap: usize,
    out: *mut *mut FpPoly,
    out_count: *mut u64,
) -> FpStatus {
    guard(|| {
        let g = tri!(graph_ref(g));
        let r = if g.is_oriented() {
            enumerate_oriented_rsf(g, cap)
        } else {
            enumerate_rsf(g, cap)
        };
        match r {
            Ok(report) => {
                if !out_count.is_null() {
                    *out_count = report.forest_count;
                }
                emit_poly(out, report.weighted_sum)
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Runs the verification suite up to `n_max` and writes the reports as a
/// JSON array (free with `fp_string_free`). Returns
/// `FP_STATUS_VERIFY_FAILED` if any report failed; the JSON is still set.
///
/// # Safety
/// `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fp_verify_suite(n_max: u32, out_json: *mut *mut c_char) -> FpStatus {
    guard(|| {
        if out_json.is_null() {
            return fail(FpStatus::NullPointer, "null output pointer");
        }
        if n_max == 0 {
            return fail(FpStatus::DomainError, "n_max must be at least 1");
        }
        let reports = run_suite(n_max);
        let json = serde_json::to_string(&reports).expect("reports serialize");
        *out_json = into_c_string(json);
        match reports.iter().filter(|r| !r.passed).count() {
            0 => FpStatus::Ok,
            k => fail(FpStatus::VerifyFailed, format!("{k} reports failed")),
        }
    })
}
