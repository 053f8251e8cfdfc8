//! C ABI over `ncmod`.
//!
//! Algebras are passed as opaque [`NcmodAlgebra`] handles. Every fallible
//! call returns an [`NcmodStatus`]; on failure the message is available from
//! [`ncmod_last_error`] on the same thread. Strings returned through `out`
//! parameters are owned by the caller and released with [`ncmod_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use ncmod::algebra::{load_builtin, AlgElem, Algebra};
use ncmod::tensorcalc::{differentiate, parse_ncpoly};
use ncmod::verify::run_suites;
use ncmod::Error;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcmodStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownAlgebra = 3,
    InvalidAlgebra = 4,
    Malformed = 5,
    DimensionMismatch = 6,
    Syntax = 7,
    NonAssociative = 8,
    NonUnital = 9,
    UnknownSuite = 10,
    InvalidArgument = 11,
    VerificationFailed = 12,
    Panic = 13,
}

/// Opaque algebra handle.
pub struct NcmodAlgebra(Algebra);

/// Result of [`ncmod_algebra_classify`].
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NcmodClassification {
    pub commutative: bool,
    pub associative: bool,
    pub has_unit: bool,
    pub nucleus_dim: usize,
    pub center_dim: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> NcmodStatus {
    match e {
        Error::UnknownAlgebra(_) => NcmodStatus::UnknownAlgebra,
        Error::InvalidAlgebra(_) => NcmodStatus::InvalidAlgebra,
        Error::Format(_) => NcmodStatus::Malformed,
        Error::DimensionMismatch(_) | Error::AlgebraMismatch { .. } | Error::OrientationMismatch(_) => {
            NcmodStatus::DimensionMismatch
        }
        Error::Syntax { .. } | Error::UnknownVariable(_) | Error::NegativeExponent { .. } => NcmodStatus::Syntax,
        Error::NonAssociative(_) => NcmodStatus::NonAssociative,
        Error::NonUnital(_) => NcmodStatus::NonUnital,
        Error::UnknownSuite(_) => NcmodStatus::UnknownSuite,
        _ => NcmodStatus::InvalidArgument,
    }
}

struct Fail(NcmodStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `f`, recording any failure (including a panic) as the last error.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> NcmodStatus {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            NcmodStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            NcmodStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(NcmodStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(NcmodStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn alg_arg<'a>(p: *const NcmodAlgebra) -> Result<&'a Algebra, Fail> {
    p.as_ref()
        .map(|a| &a.0)
        .ok_or_else(|| Fail(NcmodStatus::NullPointer, "algebra handle is null".into()))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(NcmodStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(NcmodStatus::InvalidArgument, "result contains nul".into()))?;
    write_out(out, c.into_raw())
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn ncmod_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ncmod_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Loads a built-in algebra (`quaternion`, `octonion`, ...).
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncmod_algebra_builtin(name: *const c_char, out: *mut *mut NcmodAlgebra) -> NcmodStatus {
    guard(|| {
        let alg = load_builtin(str_arg(name, "name")?)?;
        write_out(out, Box::into_raw(Box::new(NcmodAlgebra(alg))))
    })
}

/// Builds an algebra from a structure-constants JSON document.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncmod_algebra_from_json(json: *const c_char, out: *mut *mut NcmodAlgebra) -> NcmodStatus {
    guard(|| {
        let alg = Algebra::from_json(str_arg(json, "json")?)?;
        write_out(out, Box::into_raw(Box::new(NcmodAlgebra(alg))))
    })
}

/// Releases an algebra handle. Null is ignored.
///
/// # Safety
/// `alg` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ncmod_algebra_free(alg: *mut NcmodAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Dimension over the rationals; 0 for a null handle.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ncmod_algebra_dim(alg: *const NcmodAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.0.dim())
}

/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncmod_algebra_classify(
    alg: *const NcmodAlgebra,
    out: *mut NcmodClassification,
) -> NcmodStatus {
    guard(|| {
        let a = alg_arg(alg)?;
        let c = a.classify();
        write_out(
            out,
            NcmodClassification {
                commutative: c.commutative,
                associative: c.associative,
                has_unit: a.has_unit(),
                nucleus_dim: c.nucleus_dim,
                center_dim: c.center_dim,
            },
        )
    })
}

/// Product of two elements given as coordinate strings `"c0,c1,..."`; the
/// product is written to `out` in the same form.
///
/// # Safety
/// `alg` must be a live handle, `x` and `y` nul-terminated strings and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncmod_mul(
    alg: *const NcmodAlgebra,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
) -> NcmodStatus {
    guard(|| {
        let a = alg_arg(alg)?;
        let x = AlgElem::parse(a, str_arg(x, "x")?)?;
        let y = AlgElem::parse(a, str_arg(y, "y")?)?;
        write_string(out, a.mul(&x, &y)?.to_coord_string())
    })
}

/// Partial derivative of `expr` in `wrt`, rendered as `scale·(prefix ⊗ suffix) + ...`.
/// `vars` is a comma-separated variable list.
///
/// # Safety
/// All string arguments must be nul-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncmod_diff(
    vars: *const c_char,
    expr: *const c_char,
    wrt: *const c_char,
    out: *mut *mut c_char,
) -> NcmodStatus {
    guard(|| {
        let vars: Vec<String> = str_arg(vars, "vars")?
            .split(',')
            .map(|v| v.trim().to_string())
            .collect();
        let p = parse_ncpoly(str_arg(expr, "expr")?, &vars)?;
        write_string(out, differentiate(&p, str_arg(wrt, "wrt")?)?.to_string())
    })
}

/// Runs a property suite (or `"all"`) and writes the JSON report to `out`.
/// Returns [`NcmodStatus::VerificationFailed`] when any law fails; the report
/// is written in that case too.
///
/// # Safety
/// `alg` must be a live handle, `suite` nul-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncmod_verify(
    alg: *const NcmodAlgebra,
    suite: *const c_char,
    trials: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> NcmodStatus {
    let mut passed = true;
    let status = guard(|| {
        let a = alg_arg(alg)?;
        let name = str_arg(suite, "suite")?;
        let reports = run_suites(name, a, trials, seed, None)?;
        passed = reports.iter().all(|r| r.passed);
        let json = if name == "all" {
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        } else {
            reports[0].to_json()
        };
        write_string(out, json)
    });
    if status == NcmodStatus::Ok && !passed {
        set_error("verification failures".into());
        return NcmodStatus::VerificationFailed;
    }
    status
}
