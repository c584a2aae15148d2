//! C interface to `hyperpoly`.
//!
//! Hyperfields and polynomials cross the boundary as opaque handles. Every
//! fallible call returns an [`HpStatus`]; on failure the message is available
//! from [`hp_last_error`] on the same thread. Strings returned by this library
//! must be released with [`hp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hyperpoly::descartes::sign_changes;
use hyperpoly::parse::{parse_element, parse_field, parse_poly};
use hyperpoly::polynomial::{is_root, multiplicity};
use hyperpoly::tropical::nu;
use hyperpoly::{Error, Hyperfield, Poly};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Unsupported = 5,
    ZeroPolynomial = 6,
    InstanceMismatch = 7,
    Internal = 8,
    Panic = 9,
}

/// A hyperfield.
pub struct HpField {
    field: Hyperfield,
}

/// A polynomial together with the hyperfield it lives over.
pub struct HpPoly {
    field: Hyperfield,
    poly: Poly,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> HpStatus {
    match err {
        Error::Parse(_) => HpStatus::Parse,
        Error::Unsupported(_) | Error::NonEnumerable(_) => HpStatus::Unsupported,
        Error::ZeroPolynomial => HpStatus::ZeroPolynomial,
        Error::InstanceMismatch { .. } => HpStatus::InstanceMismatch,
        Error::Internal(_) => HpStatus::Internal,
        _ => HpStatus::Domain,
    }
}

struct Fail(HpStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            HpStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside hyperpoly".into());
            HpStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(HpStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(HpStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(HpStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(HpStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

fn to_c(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(HpStatus::Internal, "string contains a NUL byte".into()))
}

/// Message of the last failed call on this thread, or null. Owned by the
/// library and valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn hp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `Q`, `Fp:7`, `S`, `K`, `W`, `P`, `T` or `quot:7:1,2,4`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_field_parse(spec: *const c_char, out: *mut *mut HpField) -> HpStatus {
    guard(|| {
        let field = parse_field(text(spec, "spec")?)?;
        write(out, Box::into_raw(Box::new(HpField { field })))
    })
}

/// # Safety
/// `field` must be null or a handle from [`hp_field_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hp_field_free(field: *mut HpField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Parses ascending comma-separated coefficients such as `1,-1,-1,1`.
///
/// # Safety
/// `field` must be a live handle, `coeffs` a NUL-terminated string and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_poly_parse(field: *const HpField, coeffs: *const c_char, out: *mut *mut HpPoly) -> HpStatus {
    guard(|| {
        let f = &deref(field, "field")?.field;
        let (poly, _) = parse_poly(f, text(coeffs, "coeffs")?)?;
        write(out, Box::into_raw(Box::new(HpPoly { field: f.clone(), poly })))
    })
}

/// # Safety
/// `poly` must be null or a handle from [`hp_poly_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hp_poly_free(poly: *mut HpPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Degree, or -1 for the zero polynomial.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_poly_degree(poly: *const HpPoly, out: *mut c_int) -> HpStatus {
    guard(|| {
        let p = deref(poly, "poly")?;
        write(out, p.poly.degree().map_or(-1, |d| d as c_int))
    })
}

/// Normalized coefficient text of `poly`; free with [`hp_string_free`].
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_poly_to_string(poly: *const HpPoly, out: *mut *mut c_char) -> HpStatus {
    guard(|| {
        let p = deref(poly, "poly")?;
        write(out, to_c(p.poly.to_string())?)
    })
}

/// Whether zero lies in `p(a)`.
///
/// # Safety
/// `poly` must be a live handle, `at` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_is_root(poly: *const HpPoly, at: *const c_char, out: *mut bool) -> HpStatus {
    guard(|| {
        let p = deref(poly, "poly")?;
        let a = parse_element(&p.field, text(at, "at")?)?;
        write(out, is_root(&p.field, &p.poly, &a)?)
    })
}

/// Multiplicity of `at` as a root of `poly`.
///
/// # Safety
/// `poly` must be a live handle, `at` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_multiplicity(poly: *const HpPoly, at: *const c_char, out: *mut usize) -> HpStatus {
    guard(|| {
        let p = deref(poly, "poly")?;
        let a = parse_element(&p.field, text(at, "at")?)?;
        write(out, multiplicity(&p.field, &p.poly, &a)?.multiplicity)
    })
}

/// Sign changes of a polynomial over S, zeros skipped.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_sign_changes(poly: *const HpPoly, out: *mut usize) -> HpStatus {
    guard(|| {
        let p = deref(poly, "poly")?;
        write(out, sign_changes(&p.poly)?)
    })
}

/// Horizontal length of the Newton polygon segment with slope `-s`, where
/// `s` is a rational or `inf`.
///
/// # Safety
/// `poly` must be a live tropical handle, `s` a NUL-terminated string,
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hp_nu(poly: *const HpPoly, s: *const c_char, out: *mut usize) -> HpStatus {
    guard(|| {
        let p = deref(poly, "poly")?;
        if !p.field.is_tropical() {
            return Err(Fail(HpStatus::Domain, format!("nu needs a polynomial over T, not {}", p.field.spec())));
        }
        let e = parse_element(&p.field, text(s, "s")?)?;
        let t = e.as_trop().ok_or_else(|| Fail(HpStatus::Internal, "non-tropical element".into()))?;
        write(out, nu(&p.poly, t)?)
    })
}

/// Runs the command line tool on `argv` (without the program name). The
/// exit code goes to `code`; stdout and stderr are returned as strings to be
/// freed with [`hp_string_free`]. Either output pointer may be null.
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings; `code` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hp_run_cli(
    argc: usize,
    argv: *const *const c_char,
    code: *mut c_int,
    out_stdout: *mut *mut c_char,
    out_stderr: *mut *mut c_char,
) -> HpStatus {
    guard(|| {
        if argc > 0 && argv.is_null() {
            return Err(Fail(HpStatus::NullPointer, "argv is null".into()));
        }
        let mut args = vec!["hyperpoly".to_string()];
        for i in 0..argc {
            args.push(text(*argv.add(i), "argument")?.to_string());
        }
        let outcome = hyperpoly::cli::run(args);
        write(code, outcome.code)?;
        if !out_stdout.is_null() {
            out_stdout.write(to_c(outcome.stdout)?);
        }
        if !out_stderr.is_null() {
            out_stderr.write(to_c(outcome.stderr)?);
        }
        Ok(())
    })
}
