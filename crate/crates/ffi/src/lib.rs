//! C interface to `diophant`.
//!
//! Exact values cross the boundary as NUL-terminated decimal strings in the
//! same syntax the CLI accepts and prints. Every fallible call returns a
//! [`DioStatus`]; on failure the message is available from
//! [`dio_last_error_message`] on the same thread until the next failing call.
//!
//! Handles are opaque and owned by the caller once returned. Strings returned
//! through `char **` out-parameters must be released with [`dio_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use diophant::approx::{self, Approximation, Side};
use diophant::{beatty, cli, Error, ExactReal, Rational};
use num_bigint::BigInt;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DioStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    /// An irrational value was required.
    RationalInput = 5,
    Unsupported = 6,
    DivideByZero = 7,
    /// No successor, predecessor or search hit.
    NotFound = 8,
    /// A scan bound, guard or precision budget was exhausted.
    ResourceLimit = 9,
    Internal = 10,
    Panic = 11,
}

impl From<&Error> for DioStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse { .. } => DioStatus::Parse,
            Error::Domain(_) | Error::Certificate(_) => DioStatus::Domain,
            Error::RationalInput(_) => DioStatus::RationalInput,
            Error::Unsupported(_) => DioStatus::Unsupported,
            Error::DivideByZero => DioStatus::DivideByZero,
            Error::NoSuccessor(_) | Error::NoPredecessor(_) | Error::NotFound(_) => DioStatus::NotFound,
            Error::ResourceLimit(_) | Error::Guard(_) | Error::Precision(_) | Error::IndeterminateSign(_) => {
                DioStatus::ResourceLimit
            }
            Error::Internal(_) => DioStatus::Internal,
        }
    }
}

/// An exact real number: rational or quadratic irrational.
pub struct DioReal(ExactReal);

/// A rational approximation `p/q` together with the bound it satisfies.
pub struct DioApprox(Approximation);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', "?")).expect("NULs replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Fail(DioStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(DioStatus::from(&e), e.to_string())
    }
}

type Res<T> = Result<T, Fail>;

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Res<()>) -> DioStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DioStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside diophant");
            DioStatus::Panic
        }
    }
}

fn null(name: &str) -> Fail {
    Fail(DioStatus::NullArgument, format!("{name} is null"))
}

unsafe fn text<'a>(p: *const c_char, name: &str) -> Res<&'a str> {
    if p.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(DioStatus::InvalidUtf8, format!("{name} is not valid UTF-8")))
}

unsafe fn href<'a, T>(p: *const T, name: &str) -> Res<&'a T> {
    p.as_ref().ok_or_else(|| null(name))
}

unsafe fn out<T>(p: *mut T, name: &str, v: T) -> Res<()> {
    if p.is_null() {
        return Err(null(name));
    }
    p.write(v);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library output has no NUL").into_raw()
}

fn rational(s: &str, name: &str) -> Res<Rational> {
    let x: ExactReal = s.parse()?;
    x.as_rational()
        .cloned()
        .ok_or_else(|| Fail(DioStatus::Domain, format!("{name} must be rational, got {x}")))
}

/// Message of the last failing call on this thread, or null if none.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn dio_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn dio_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string obtained from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn dio_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `text` (`7/5`, `sqrt(2)`, `(1+sqrt(5))/2`, ...) into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out_real` writable.
#[no_mangle]
pub unsafe extern "C" fn dio_real_parse(text_: *const c_char, out_real: *mut *mut DioReal) -> DioStatus {
    guard(|| {
        let x: ExactReal = text(text_, "text")?.parse()?;
        out(out_real, "out_real", Box::into_raw(Box::new(DioReal(x))))
    })
}

/// Canonical text of `real`, e.g. `(0+1*sqrt(2))/1`. Free with [`dio_string_free`].
///
/// # Safety
/// `real` must be a live handle and `out_text` writable.
#[no_mangle]
pub unsafe extern "C" fn dio_real_to_string(real: *const DioReal, out_text: *mut *mut c_char) -> DioStatus {
    guard(|| {
        let x = href(real, "real")?;
        out(out_text, "out_text", c_string(x.0.to_string()))
    })
}

/// Nonzero iff `real` is rational.
///
/// # Safety
/// `real` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dio_real_is_rational(real: *const DioReal) -> c_int {
    real.as_ref().is_some_and(|x| x.0.is_rational()).into()
}

/// `-1`, `0` or `1` as `a` is below, equal to or above `b`.
///
/// # Safety
/// Both handles must be live and `out_order` writable.
#[no_mangle]
pub unsafe extern "C" fn dio_real_compare(
    a: *const DioReal,
    b: *const DioReal,
    out_order: *mut c_int,
) -> DioStatus {
    guard(|| {
        let (a, b) = (href(a, "a")?, href(b, "b")?);
        out(out_order, "out_order", a.0.compare(&b.0) as c_int)
    })
}

/// Releases a real handle. Null is ignored.
///
/// # Safety
/// `real` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn dio_real_free(real: *mut DioReal) {
    if !real.is_null() {
        drop(Box::from_raw(real));
    }
}

unsafe fn approx_call(
    alpha: *const DioReal,
    out_approx: *mut *mut DioApprox,
    f: impl FnOnce(&ExactReal) -> diophant::Result<Approximation>,
) -> DioStatus {
    guard(|| {
        let a = f(&href(alpha, "alpha")?.0)?;
        out(out_approx, "out_approx", Box::into_raw(Box::new(DioApprox(a))))
    })
}

/// `p/q` with `q <= big_q` and `|alpha - p/q| <= 1/(q big_q)`.
///
/// # Safety
/// `alpha` must be a live handle and `out_approx` writable.
#[no_mangle]
pub unsafe extern "C" fn dio_dirichlet(
    alpha: *const DioReal,
    big_q: u64,
    out_approx: *mut *mut DioApprox,
) -> DioStatus {
    approx_call(alpha, out_approx, |a| approx::dirichlet(a, &BigInt::from(big_q)))
}

/// `p/q` with `q > big_q` and `|alpha - p/q| < 1/q^2`.
///
/// # Safety
/// `alpha` must be a live handle and `out_approx` writable.
#[no_mangle]
pub unsafe extern "C" fn dio_large_denominator(
    alpha: *const DioReal,
    big_q: u64,
    out_approx: *mut *mut DioApprox,
) -> DioStatus {
    approx_call(alpha, out_approx, |a| {
        approx::large_denominator(a, &BigInt::from(big_q))
    })
}

/// `p/q` with `q > big_q` and `|alpha - p/q| < 1/(sqrt(5) q^2)`.
///
/// # Safety
/// `alpha` must be a live handle and `out_approx` writable.
#[no_mangle]
pub unsafe extern "C" fn dio_hurwitz(
    alpha: *const DioReal,
    big_q: u64,
    out_approx: *mut *mut DioApprox,
) -> DioStatus {
    approx_call(alpha, out_approx, |a| approx::hurwitz(a, &BigInt::from(big_q)))
}

/// Asymmetric approximation with parameter `tau` (a rational string).
///
/// # Safety
/// `alpha` must be a live handle, `tau` a NUL-terminated string and
/// `out_approx` writable.
#[no_mangle]
pub unsafe extern "C" fn dio_segre(
    alpha: *const DioReal,
    tau: *const c_char,
    big_q: u64,
    out_approx: *mut *mut DioApprox,
) -> DioStatus {
    let tau = match text(tau, "tau").and_then(|t| rational(t, "tau")) {
        Ok(t) => t,
        Err(f) => return guard(|| Err(f)),
    };
    approx_call(alpha, out_approx, |a| {
        approx::segre(a, &tau, &BigInt::from(big_q))
    })
}

/// One-sided approximation: `above` nonzero asks for `p/q > alpha`.
///
/// # Safety
/// `alpha` must be a live handle and `out_approx` writable.
#[no_mangle]
pub unsafe extern "C" fn dio_one_sided(
    alpha: *const DioReal,
    big_q: u64,
    above: c_int,
    out_approx: *mut *mut DioApprox,
) -> DioStatus {
    let side = if above != 0 { Side::Above } else { Side::Below };
    approx_call(alpha, out_approx, |a| {
        approx::one_sided(a, &BigInt::from(big_q), side)
    })
}

/// Numerator `p` as a decimal string. Free with [`dio_string_free`].
///
/// # Safety
/// `approx` must be a live handle and `out_text` writable.
#[no_mangle]
pub unsafe extern "C" fn dio_approx_numerator(
    approx: *const DioApprox,
    out_text: *mut *mut c_char,
) -> DioStatus {
    guard(|| {
        out(
            out_text,
            "out_text",
            c_string(href(approx, "approx")?.0.p.to_string()),
        )
    })
}

/// Denominator `q` as a decimal string. Free with [`dio_string_free`].
///
/// # Safety
/// `approx` must be a live handle and `out_text` writable.
#[no_mangle]
pub unsafe extern "C" fn dio_approx_denominator(
    approx: *const DioApprox,
    out_text: *mut *mut c_char,
) -> DioStatus {
    guard(|| {
        out(
            out_text,
            "out_text",
            c_string(href(approx, "approx")?.0.q.to_string()),
        )
    })
}

/// The bound kind, e.g. `DIRICHLET(5)`. Free with [`dio_string_free`].
///
/// # Safety
/// `approx` must be a live handle and `out_text` writable.
#[no_mangle]
pub unsafe extern "C" fn dio_approx_kind(approx: *const DioApprox, out_text: *mut *mut c_char) -> DioStatus {
    guard(|| {
        out(
            out_text,
            "out_text",
            c_string(href(approx, "approx")?.0.kind.to_string()),
        )
    })
}

/// Nonzero iff the bound was re-checked exactly after construction.
///
/// # Safety
/// `approx` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dio_approx_verified(approx: *const DioApprox) -> c_int {
    approx.as_ref().is_some_and(|a| a.0.verified).into()
}

/// Releases an approximation handle. Null is ignored.
///
/// # Safety
/// `approx` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn dio_approx_free(approx: *mut DioApprox) {
    if !approx.is_null() {
        drop(Box::from_raw(approx));
    }
}

/// `floor(n alpha)` as a decimal string. Free with [`dio_string_free`].
///
/// # Safety
/// `alpha` must be a live handle and `out_text` writable.
#[no_mangle]
pub unsafe extern "C" fn dio_beatty_term(
    alpha: *const DioReal,
    n: u64,
    out_text: *mut *mut c_char,
) -> DioStatus {
    guard(|| {
        let k = beatty::beatty_term(&href(alpha, "alpha")?.0, &BigInt::from(n))?;
        out(out_text, "out_text", c_string(k.to_string()))
    })
}

/// Whether `k = floor(n alpha)` for some `n >= 0`. On a hit `out_n` receives
/// `n` as a string (free with [`dio_string_free`]), otherwise null.
///
/// # Safety
/// `alpha` must be a live handle; both out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn dio_beatty_member(
    alpha: *const DioReal,
    k: u64,
    out_is_member: *mut c_int,
    out_n: *mut *mut c_char,
) -> DioStatus {
    guard(|| {
        let hit = beatty::member(&href(alpha, "alpha")?.0, &BigInt::from(k))?;
        if out_n.is_null() {
            return Err(null("out_n"));
        }
        out(out_is_member, "out_is_member", hit.is_some().into())?;
        out(
            out_n,
            "out_n",
            hit.map_or(ptr::null_mut(), |n| c_string(n.to_string())),
        )
    })
}

/// Whether the Beatty sequences of `alpha` and `beta` partition `1..=bound`.
///
/// # Safety
/// Both handles must be live and `out_pass` writable.
#[no_mangle]
pub unsafe extern "C" fn dio_partition_check(
    alpha: *const DioReal,
    beta: *const DioReal,
    bound: u64,
    out_pass: *mut c_int,
) -> DioStatus {
    guard(|| {
        let (a, b) = (href(alpha, "alpha")?, href(beta, "beta")?);
        let rep = beatty::partition_check(&a.0, &b.0, &BigInt::from(bound))?;
        out(out_pass, "out_pass", rep.pass().into())
    })
}

/// Runs the command line tool in-process. `argv` excludes the program name.
/// The exit code follows the binary: 0 success, 1 failed check, 2 usage or
/// parse error, 3 resource limit. Both output strings are always set and must
/// be freed with [`dio_string_free`].
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings; out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn dio_cli_run(
    argc: c_int,
    argv: *const *const c_char,
    out_exit_code: *mut c_int,
    out_stdout: *mut *mut c_char,
    out_stderr: *mut *mut c_char,
) -> DioStatus {
    guard(|| {
        if out_exit_code.is_null() || out_stdout.is_null() || out_stderr.is_null() {
            return Err(null("output pointer"));
        }
        let argc = usize::try_from(argc).map_err(|_| Fail(DioStatus::Domain, "argc is negative".into()))?;
        if argc > 0 && argv.is_null() {
            return Err(null("argv"));
        }
        let mut args = vec!["diophant".to_owned()];
        for i in 0..argc {
            args.push(text(*argv.add(i), "argv entry")?.to_owned());
        }
        let res = cli::run(args);
        let clean = |s: String| s.replace('\0', "?");
        out(out_exit_code, "out_exit_code", res.code)?;
        out(out_stdout, "out_stdout", c_string(clean(res.stdout)))?;
        out(out_stderr, "out_stderr", c_string(clean(res.stderr)))
    })
}
