use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use hyperpoly_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = hp_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn poly(field: &str, coeffs: &str) -> (*mut HpField, *mut HpPoly) {
    let mut f = ptr::null_mut();
    assert_eq!(hp_field_parse(c(field).as_ptr(), &mut f), HpStatus::Ok);
    let mut p = ptr::null_mut();
    assert_eq!(hp_poly_parse(f, c(coeffs).as_ptr(), &mut p), HpStatus::Ok);
    (f, p)
}

#[test]
fn sign_multiplicity() {
    unsafe {
        let (f, p) = poly("S", "1,-1,-1,1");
        let mut m = 0usize;
        assert_eq!(hp_multiplicity(p, c("1").as_ptr(), &mut m), HpStatus::Ok);
        assert_eq!(m, 2);
        let mut root = false;
        assert_eq!(hp_is_root(p, c("-1").as_ptr(), &mut root), HpStatus::Ok);
        assert!(root);
        let mut changes = 0usize;
        assert_eq!(hp_sign_changes(p, &mut changes), HpStatus::Ok);
        assert_eq!(changes, 2);
        let mut deg: c_int = 0;
        assert_eq!(hp_poly_degree(p, &mut deg), HpStatus::Ok);
        assert_eq!(deg, 3);
        hp_poly_free(p);
        hp_field_free(f);
    }
}

#[test]
fn tropical_nu_and_text() {
    unsafe {
        let (f, p) = poly("T", "2,0,1,inf,-1,0,inf");
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(hp_poly_to_string(p, &mut s), HpStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "2,0,1,inf,-1,0");
        hp_string_free(s);
        for (slope, want) in [("2", 1), ("1/3", 3), ("-1", 1), ("0", 0), ("inf", 0)] {
            let mut n = 9usize;
            assert_eq!(hp_nu(p, c(slope).as_ptr(), &mut n), HpStatus::Ok);
            assert_eq!(n, want, "{slope}");
        }
        hp_poly_free(p);
        hp_field_free(f);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(hp_field_parse(c("Z").as_ptr(), &mut f), HpStatus::Parse);
        assert!(last_error().contains("Z"));
        assert_eq!(hp_field_parse(c("Fp:8").as_ptr(), &mut f), HpStatus::Domain);
        assert_eq!(hp_field_parse(ptr::null(), &mut f), HpStatus::NullPointer);
        assert_eq!(hp_field_parse(c("S").as_ptr(), ptr::null_mut()), HpStatus::NullPointer);

        let (pf, p) = poly("P", "1,1,1");
        let mut m = 0usize;
        assert_eq!(hp_multiplicity(p, c("e^3/5").as_ptr(), &mut m), HpStatus::Unsupported);
        let mut root = false;
        assert_eq!(hp_is_root(p, c("e^3/5").as_ptr(), &mut root), HpStatus::Ok);
        assert!(root);
        assert!(hp_last_error().is_null());
        assert_eq!(hp_nu(p, c("0").as_ptr(), &mut m), HpStatus::Domain);
        hp_poly_free(p);
        hp_field_free(pf);

        let (sf, z) = poly("S", "0,0");
        assert_eq!(hp_is_root(z, c("1").as_ptr(), &mut root), HpStatus::ZeroPolynomial);
        hp_poly_free(z);
        hp_field_free(sf);
        hp_poly_free(ptr::null_mut());
        hp_field_free(ptr::null_mut());
        hp_string_free(ptr::null_mut());
    }
}

#[test]
fn cli_through_the_boundary() {
    let args = [c("--format"), c("json"), c("roots"), c("--field"), c("W"), c("--poly"), c("1,1,1")];
    let argv: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
    let mut code: c_int = -1;
    let mut out: *mut c_char = ptr::null_mut();
    let mut err: *mut c_char = ptr::null_mut();
    unsafe {
        assert_eq!(hp_run_cli(argv.len(), argv.as_ptr(), &mut code, &mut out, &mut err), HpStatus::Ok);
        assert_eq!(code, 0);
        let text = CStr::from_ptr(out).to_str().unwrap();
        assert!(text.contains("\"total\": 4"), "{text}");
        hp_string_free(out);
        hp_string_free(err);
        let bad = [c("roots"), c("--field"), c("S"), c("--poly"), c("1,5")];
        let argv: Vec<*const c_char> = bad.iter().map(|a| a.as_ptr()).collect();
        assert_eq!(hp_run_cli(argv.len(), argv.as_ptr(), &mut code, ptr::null_mut(), ptr::null_mut()), HpStatus::Ok);
        assert_eq!(code, 2);
    }
}
