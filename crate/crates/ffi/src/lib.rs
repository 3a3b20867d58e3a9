//! C ABI for `recsum`.
//!
//! Conventions:
//! * Functions return a [`RecsumStatus`]; results go through out-pointers.
//! * Strings handed out are owned by the caller and released with
//!   [`recsum_string_free`]. Handles are released with their `_free` function.
//! * After a non-OK status, [`recsum_last_error`] describes the failure. The
//!   message is per thread and stays valid until the next failing call.
//! * Panics never cross the boundary; they surface as `RECSUM_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use recsum::algebraic::{find_rho, minpoly_closed, minpoly_oracle};
use recsum::exact::parse_rational;
use recsum::identity::{
    cheb_identity, cheb_identity_symbolic, discover, fibo_identity, fibpoly_identity, neg_fibo_identity,
    DiscoveryReport,
};
use recsum::polynomials::{family_by_recurrence, FamilyKind};
use recsum::sequences::{fib_number, lucas_number};
use recsum::{Error, UniPoly};

pub const RECSUM_ABI_VERSION: u32 = 1;

pub const RECSUM_FAMILY_FIBO: u32 = 0;
pub const RECSUM_FAMILY_NEGFIBO: u32 = 1;
pub const RECSUM_FAMILY_CHEB: u32 = 2;
pub const RECSUM_FAMILY_FIBPOLY: u32 = 3;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecsumStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Unsupported = 3,
    SingularMatrix = 4,
    NoConvergence = 5,
    Failed = 6,
    Panic = 7,
}

/// Positive root of `r^{p+1} - r^p - r - 1` and `a = rho - 1/rho`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecsumRoot {
    pub p: u32,
    pub rho: f64,
    pub a: f64,
    pub residual: f64,
}

/// Outcome of [`recsum_verify`]. `factor` is owned by the caller.
#[repr(C)]
#[derive(Debug)]
pub struct RecsumVerification {
    pub m: u32,
    pub verified: bool,
    pub factor: *mut c_char,
}

/// Exact polynomial with rational coefficients.
pub struct RecsumPoly(UniPoly);

/// Result of [`recsum_discover`].
pub struct RecsumDiscovery(DiscoveryReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> RecsumStatus {
    match e {
        Error::InvalidArgument(_) | Error::Parse { .. } | Error::DimensionMismatch(_) => RecsumStatus::InvalidArgument,
        Error::Unsupported(_) => RecsumStatus::Unsupported,
        Error::SingularMatrix => RecsumStatus::SingularMatrix,
        Error::NoBracket { .. } | Error::NoConvergence(_) => RecsumStatus::NoConvergence,
        Error::NonIntegral(_) | Error::FormsDisagree(_) => RecsumStatus::Failed,
    }
}

struct Fail(RecsumStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(RecsumStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> RecsumStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RecsumStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RecsumStatus::Panic
        }
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `s` is null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(RecsumStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

/// # Safety
/// `out` is null or valid for a write of `T`.
unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

#[no_mangle]
pub extern "C" fn recsum_abi_version() -> u32 {
    RECSUM_ABI_VERSION
}

/// Message for the last failure on this thread, or null. Do not free.
#[no_mangle]
pub extern "C" fn recsum_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn recsum_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn recsum_find_rho(p: u32, out: *mut RecsumRoot) -> RecsumStatus {
    guard(|| {
        let r = find_rho(p)?;
        write(out, RecsumRoot { p: r.p, rho: r.rho, a: r.a, residual: r.residual }, "out")
    })
}

/// Annihilating polynomial of `a = rho - 1/rho`, from the closed form or, when
/// `oracle` is true, from the exact linear systems.
///
/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn recsum_minpoly(p: u32, oracle: bool, out: *mut *mut RecsumPoly) -> RecsumStatus {
    guard(|| {
        let m = if oracle { minpoly_oracle(p)? } else { minpoly_closed(p)? };
        write(out, Box::into_raw(Box::new(RecsumPoly(m.poly))), "out")
    })
}

/// Member `n` of a polynomial family: `kind` is one of `'T'`, `'U'`, `'F'`, `'L'`.
///
/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn recsum_family_poly(kind: c_char, n: u32, out: *mut *mut RecsumPoly) -> RecsumStatus {
    guard(|| {
        let symbol = (kind as u8 as char).to_string();
        let kind = FamilyKind::from_symbol(&symbol)
            .ok_or_else(|| Fail(RecsumStatus::InvalidArgument, format!("unknown family {symbol:?}")))?;
        write(out, Box::into_raw(Box::new(RecsumPoly(family_by_recurrence(kind, n as usize)))), "out")
    })
}

/// Factor `A(a)` of the `b = -1` identity for odd `n`, as a polynomial in `a`.
///
/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn recsum_cheb_factor(n: u32, out: *mut *mut RecsumPoly) -> RecsumStatus {
    guard(|| {
        let id = cheb_identity_symbolic(n as usize)?;
        write(out, Box::into_raw(Box::new(RecsumPoly(id.factor))), "out")
    })
}

/// Degree, or -1 for the zero polynomial or a null handle.
///
/// # Safety
/// `poly` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn recsum_poly_degree(poly: *const RecsumPoly) -> i64 {
    poly.as_ref().and_then(|p| p.0.degree()).map_or(-1, |d| d as i64)
}

/// Coefficient of `x^i` as `"num"` or `"num/den"`; null on a null handle.
///
/// # Safety
/// `poly` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn recsum_poly_coeff(poly: *const RecsumPoly, i: usize) -> *mut c_char {
    poly.as_ref().map_or(ptr::null_mut(), |p| into_c_string(p.0.coeff(i).to_string()))
}

/// Value at `x` in floating point; NaN on a null handle.
///
/// # Safety
/// `poly` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn recsum_poly_eval(poly: *const RecsumPoly, x: f64) -> f64 {
    poly.as_ref().map_or(f64::NAN, |p| p.0.eval_f64(x))
}

/// Rendering such as `"a^3 - a^2 + 3a - 2"` with the given variable name
/// (`"x"` when `var` is null).
///
/// # Safety
/// `poly` is null or a live handle; `var` is null or NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn recsum_poly_to_string(poly: *const RecsumPoly, var: *const c_char) -> *mut c_char {
    let Some(p) = poly.as_ref() else { return ptr::null_mut() };
    let var = if var.is_null() { "x" } else { CStr::from_ptr(var).to_str().unwrap_or("x") };
    into_c_string(p.0.display_var(var).to_string())
}

/// # Safety
/// `poly` is null or a live handle, which becomes invalid.
#[no_mangle]
pub unsafe extern "C" fn recsum_poly_free(poly: *mut RecsumPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// `F_n` in decimal, for `n >= -1`.
///
/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn recsum_fibonacci(n: i64, out: *mut *mut c_char) -> RecsumStatus {
    guard(|| write(out, into_c_string(fib_number(n)?.to_string()), "out"))
}

/// `L_n` in decimal.
///
/// # Safety
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn recsum_lucas(n: u64, out: *mut *mut c_char) -> RecsumStatus {
    guard(|| write(out, into_c_string(lucas_number(n).to_string()), "out"))
}

/// Builds and certifies one of the constructed identities `S_n = A x_m`.
///
/// * `RECSUM_FAMILY_FIBO`, `RECSUM_FAMILY_NEGFIBO`: `a` and `p` are ignored.
/// * `RECSUM_FAMILY_CHEB`: `a` is a rational string, or null for symbolic `a`.
/// * `RECSUM_FAMILY_FIBPOLY`: odd `p`; `a` is ignored.
///
/// # Safety
/// `a` is null or NUL-terminated; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn recsum_verify(
    family: u32,
    n: u32,
    a: *const c_char,
    p: u32,
    out: *mut RecsumVerification,
) -> RecsumStatus {
    guard(|| {
        let n = n as usize;
        let (m, verified, factor) = match family {
            RECSUM_FAMILY_FIBO | RECSUM_FAMILY_NEGFIBO => {
                let id = if family == RECSUM_FAMILY_FIBO { fibo_identity(n)? } else { neg_fibo_identity(n)? };
                (id.m, id.verify(), id.factor.to_string())
            }
            RECSUM_FAMILY_CHEB if a.is_null() => {
                let id = cheb_identity_symbolic(n)?;
                let factor = id.factor.display_var("a").to_string();
                (id.m, id.verify(), factor)
            }
            RECSUM_FAMILY_CHEB => {
                let a = parse_rational(read_str(a, "a")?)?;
                let id = cheb_identity(n, a)?;
                (id.m, id.verify(), id.factor.to_string())
            }
            RECSUM_FAMILY_FIBPOLY => {
                let root = find_rho(p)?;
                let id = fibpoly_identity(p, n, root.rho)?;
                (id.identity.m, id.identity.verify(), format!("{:.17e}", id.identity.factor))
            }
            other => return Err(Fail(RecsumStatus::InvalidArgument, format!("unknown family id {other}"))),
        };
        write(out, RecsumVerification { m: m as u32, verified, factor: into_c_string(factor) }, "out")
    })
}

/// Exhaustive search for `S_n = A x_m`, `m <= m_max`, over
/// `x_{n+2} = a x_{n+1} + b x_n` with rational `a`, `b` given as strings.
///
/// # Safety
/// `a` and `b` are NUL-terminated; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn recsum_discover(
    a: *const c_char,
    b: *const c_char,
    n: u32,
    m_max: u32,
    out: *mut *mut RecsumDiscovery,
) -> RecsumStatus {
    guard(|| {
        let a = parse_rational(read_str(a, "a")?)?;
        let b = parse_rational(read_str(b, "b")?)?;
        let report = discover(&a, &b, n as usize, m_max as usize);
        write(out, Box::into_raw(Box::new(RecsumDiscovery(report))), "out")
    })
}

/// Number of hits; 0 for a null handle.
///
/// # Safety
/// `d` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn recsum_discovery_len(d: *const RecsumDiscovery) -> usize {
    d.as_ref().map_or(0, |d| d.0.hits.len())
}

/// Hit `i`, in increasing `m`. `*factor` is set to null when any `A` works.
///
/// # Safety
/// `d` is a live handle; `m` and `factor` are valid for writes.
#[no_mangle]
pub unsafe extern "C" fn recsum_discovery_hit(
    d: *const RecsumDiscovery,
    i: usize,
    m: *mut u32,
    factor: *mut *mut c_char,
) -> RecsumStatus {
    guard(|| {
        let d = d.as_ref().ok_or_else(|| null("discovery"))?;
        let hit = d.0.hits.get(i).ok_or_else(|| {
            Fail(RecsumStatus::InvalidArgument, format!("hit {i} out of range ({} hits)", d.0.hits.len()))
        })?;
        write(m, hit.m as u32, "m")?;
        let f = hit.factor.as_ref().map_or(ptr::null_mut(), |f| into_c_string(f.to_string()));
        write(factor, f, "factor")
    })
}

/// # Safety
/// `d` is null or a live handle, which becomes invalid.
#[no_mangle]
pub unsafe extern "C" fn recsum_discovery_free(d: *mut RecsumDiscovery) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Runs a command-line invocation (without the program name) and returns
/// its exit code: 0 success, 1 failed verification, 2 usage error. With
/// `json` set the report is the JSON document. `out_stdout` and
/// `out_stderr` may be null when not wanted.
///
/// # Safety
/// `argv` holds `argc` NUL-terminated strings; the out-pointers are null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn recsum_run(
    argc: usize,
    argv: *const *const c_char,
    json: bool,
    out_stdout: *mut *mut c_char,
    out_stderr: *mut *mut c_char,
) -> i32 {
    let result = catch_unwind(AssertUnwindSafe(|| {
        let mut args = vec!["recsum".to_string()];
        if json {
            args.push("--json".to_string());
        }
        if argc > 0 && argv.is_null() {
            return Err("argv is null".to_string());
        }
        for k in 0..argc {
            let arg = *argv.add(k);
            let s = read_str(arg, "argument").map_err(|Fail(_, m)| m)?;
            args.push(s.to_string());
        }
        Ok(recsum::cli::run_args(args))
    }));
    let run = match result {
        Ok(Ok(run)) => run,
        Ok(Err(msg)) => {
            set_error(msg.clone());
            recsum::cli::Execution { code: 2, stdout: String::new(), stderr: msg }
        }
        Err(_) => {
            set_error("internal panic");
            recsum::cli::Execution { code: 1, stdout: String::new(), stderr: "internal panic".into() }
        }
    };
    if !out_stdout.is_null() {
        out_stdout.write(into_c_string(run.stdout));
    }
    if !out_stderr.is_null() {
        out_stderr.write(into_c_string(run.stderr));
    }
    run.code
}
