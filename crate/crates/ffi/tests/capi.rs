use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use recsum_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { recsum_string_free(s) };
    out
}

fn last_error() -> String {
    let e = recsum_last_error();
    assert!(!e.is_null());
    unsafe { CStr::from_ptr(e) }.to_str().unwrap().to_string()
}

fn poly(f: impl FnOnce(*mut *mut RecsumPoly) -> RecsumStatus) -> *mut RecsumPoly {
    let mut p = ptr::null_mut();
    assert_eq!(f(&mut p), RecsumStatus::Ok);
    assert!(!p.is_null());
    p
}

#[test]
fn fibonacci_and_lucas_strings() {
    let (mut f, mut g) = (0u128, 1u128);
    for n in 0..150i64 {
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { recsum_fibonacci(n, &mut s) }, RecsumStatus::Ok);
        assert_eq!(take(s), f.to_string());
        (f, g) = (g, f + g);
    }
    let (mut l, mut k) = (2u128, 1u128);
    for n in 0..150u64 {
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { recsum_lucas(n, &mut s) }, RecsumStatus::Ok);
        assert_eq!(take(s), l.to_string());
        (l, k) = (k, l + k);
    }
}

#[test]
fn root_and_minpoly_agree() {
    for p in (3..=15).step_by(2) {
        let mut root = RecsumRoot { p: 0, rho: 0.0, a: 0.0, residual: 0.0 };
        assert_eq!(unsafe { recsum_find_rho(p, &mut root) }, RecsumStatus::Ok);
        let r = root.rho;
        assert!((r.powi(p as i32 + 1) - r.powi(p as i32) - r - 1.0).abs() < 1e-12);
        assert!((root.a - (r - 1.0 / r)).abs() < 1e-12);

        let closed = poly(|out| unsafe { recsum_minpoly(p, false, out) });
        let oracle = poly(|out| unsafe { recsum_minpoly(p, true, out) });
        let degree = unsafe { recsum_poly_degree(closed) };
        assert_eq!(degree, recsum::algebraic::minpoly_closed(p).unwrap().degree() as i64);
        assert_eq!(degree, unsafe { recsum_poly_degree(oracle) });
        for i in 0..=degree as usize {
            assert_eq!(take(unsafe { recsum_poly_coeff(closed, i) }), take(unsafe { recsum_poly_coeff(oracle, i) }));
        }
        assert!(unsafe { recsum_poly_eval(closed, root.a) }.abs() < 1e-9);
        unsafe {
            recsum_poly_free(closed);
            recsum_poly_free(oracle);
        }
    }
}

#[test]
fn cheb_factor_matches_direct_sums() {
    for n in (1..=15u32).step_by(2) {
        let f = poly(|out| unsafe { recsum_cheb_factor(n, out) });
        let m = (n as usize - 1) / 2;
        for a in -4i64..=4 {
            let (x0, x1) = (3i128, -7i128);
            let mut xs = vec![x0, x1];
            while xs.len() <= n as usize {
                let k = xs.len();
                xs.push(a as i128 * xs[k - 1] - xs[k - 2]);
            }
            // S_n holds the first n terms
            let sum: i128 = xs[..n as usize].iter().sum();
            let factor = unsafe { recsum_poly_eval(f, a as f64) };
            assert_eq!(sum as f64, factor * xs[m] as f64, "n = {n}, a = {a}");
        }
        unsafe { recsum_poly_free(f) };
    }
}

#[test]
fn verify_families() {
    let mut v = RecsumVerification { m: 0, verified: false, factor: ptr::null_mut() };
    assert_eq!(unsafe { recsum_verify(RECSUM_FAMILY_FIBO, 10, ptr::null(), 0, &mut v) }, RecsumStatus::Ok);
    assert!(v.verified);
    assert_eq!((v.m, take(v.factor)), (6, "11".to_string()));

    let a = CString::new("3/2").unwrap();
    assert_eq!(unsafe { recsum_verify(RECSUM_FAMILY_CHEB, 7, a.as_ptr(), 0, &mut v) }, RecsumStatus::Ok);
    assert!(v.verified);
    take(v.factor);

    assert_eq!(unsafe { recsum_verify(RECSUM_FAMILY_CHEB, 5, ptr::null(), 0, &mut v) }, RecsumStatus::Ok);
    assert!(take(v.factor).contains('a'));

    assert_eq!(unsafe { recsum_verify(RECSUM_FAMILY_FIBPOLY, 8, ptr::null(), 5, &mut v) }, RecsumStatus::Ok);
    assert!(v.verified);
    assert!(take(v.factor).parse::<f64>().unwrap().is_finite());

    let status = unsafe { recsum_verify(RECSUM_FAMILY_FIBO, 12, ptr::null(), 0, &mut v) };
    assert_eq!(status, RecsumStatus::InvalidArgument);
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { recsum_verify(99, 3, ptr::null(), 0, &mut v) }, RecsumStatus::InvalidArgument);
}

#[test]
fn discovery_handles() {
    let (a, b) = (CString::new("2").unwrap(), CString::new("-1").unwrap());
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { recsum_discover(a.as_ptr(), b.as_ptr(), 7, 14, &mut d) }, RecsumStatus::Ok);
    let len = unsafe { recsum_discovery_len(d) };
    let mut found = false;
    for i in 0..len {
        let (mut m, mut f) = (0u32, ptr::null_mut());
        assert_eq!(unsafe { recsum_discovery_hit(d, i, &mut m, &mut f) }, RecsumStatus::Ok);
        if !f.is_null() && take(f) == "7" && m == 3 {
            found = true;
        }
    }
    assert!(found);
    let (mut m, mut f) = (0u32, ptr::null_mut());
    assert_eq!(unsafe { recsum_discovery_hit(d, len, &mut m, &mut f) }, RecsumStatus::InvalidArgument);
    unsafe { recsum_discovery_free(d) };

    let bad = CString::new("x").unwrap();
    assert_eq!(unsafe { recsum_discover(bad.as_ptr(), b.as_ptr(), 7, 14, &mut d) }, RecsumStatus::InvalidArgument);
}

#[test]
fn null_pointers_are_reported() {
    assert_eq!(unsafe { recsum_find_rho(3, ptr::null_mut()) }, RecsumStatus::NullPointer);
    assert!(last_error().contains("null"));
    assert_eq!(unsafe { recsum_discover(ptr::null(), ptr::null(), 1, 1, ptr::null_mut()) }, RecsumStatus::NullPointer);
    assert_eq!(unsafe { recsum_poly_degree(ptr::null()) }, -1);
    assert!(unsafe { recsum_poly_eval(ptr::null(), 1.0) }.is_nan());
    assert!(unsafe { recsum_poly_coeff(ptr::null(), 0) }.is_null());
    assert_eq!(unsafe { recsum_discovery_len(ptr::null()) }, 0);
    unsafe {
        recsum_poly_free(ptr::null_mut());
        recsum_discovery_free(ptr::null_mut());
        recsum_string_free(ptr::null_mut());
    }
}

#[test]
fn run_matches_exit_codes() {
    let args: Vec<CString> = ["trick", "--x0", "3", "--x1", "5", "--n", "10"].iter().map(|s| CString::new(*s).unwrap()).collect();
    let ptrs: Vec<*const c_char> = args.iter().map(|s| s.as_ptr()).collect();
    let (mut out, mut err) = (ptr::null_mut(), ptr::null_mut());
    let code = unsafe { recsum_run(ptrs.len(), ptrs.as_ptr(), true, &mut out, &mut err) };
    assert_eq!(code, 0);
    let out = take(out);
    take(err);
    assert!(out.contains("\"schema_version\"") && out.contains("\"605\""), "{out}");

    let bad = [CString::new("frobnicate").unwrap()];
    let ptrs: Vec<*const c_char> = bad.iter().map(|s| s.as_ptr()).collect();
    assert_eq!(unsafe { recsum_run(1, ptrs.as_ptr(), false, ptr::null_mut(), ptr::null_mut()) }, 2);
}

#[test]
fn header_compiles_and_links() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header_dir = manifest.join("include");
    assert!(header_dir.join("recsum.h").exists());
    // target/<profile>/deps/<this test> -> target/<profile>
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("librecsum_ffi.a");
    if !lib.exists() {
        eprintln!("static library not built at {}; C link test not run", lib.display());
        return;
    }
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let exe = std::env::temp_dir().join(format!("recsum_capi_{}", std::process::id()));
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&header_dir)
        .arg(manifest.join("tests/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status();
    let Ok(status) = status else {
        eprintln!("{cc} not available; C link test not run");
        return;
    };
    assert!(status.success(), "C compile failed");
    let run = Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(&exe);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
