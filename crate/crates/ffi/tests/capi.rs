use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use forestpoly_ffi::*;

fn parse(text: &str) -> *mut FpPoly {
    let c = CString::new(text).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { fp_poly_parse(c.as_ptr(), &mut p) }, FpStatus::Ok);
    p
}

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { fp_string_free(s) };
    owned
}

fn render(p: *const FpPoly) -> String {
    take_string(unsafe { fp_poly_to_string(p) })
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(fp_last_error()) }.to_str().unwrap().to_owned()
}

#[test]
fn parse_format_and_inspect() {
    let p = parse("3x^2 -  x + 7");
    assert_eq!(render(p), "3*x^2 - x + 7");
    assert_eq!(unsafe { fp_poly_degree(p) }, 2);
    assert_eq!(take_string(unsafe { fp_poly_coeff(p, 1) }), "-1");
    assert_eq!(take_string(unsafe { fp_poly_coeff(p, 9) }), "0");
    assert_eq!(take_string(unsafe { fp_poly_homogenize(p, 3) }), "3*a^2*b - a*b^2 + 7*b^3");
    let zero = parse("0");
    assert_eq!(unsafe { fp_poly_degree(zero) }, -1);
    unsafe {
        fp_poly_free(p);
        fp_poly_free(zero);
    }
}

#[test]
fn parse_error_sets_message() {
    let c = CString::new("x +").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { fp_poly_parse(c.as_ptr(), &mut p) }, FpStatus::ParseError);
    assert!(p.is_null());
    assert!(last_error().contains("dangling operator"), "{}", last_error());
}

#[test]
fn arithmetic() {
    let (p, q) = (parse("x + 1"), parse("x - 1"));
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(fp_poly_mul(p, q, &mut out), FpStatus::Ok);
        assert_eq!(render(out), "x^2 - 1");
        let mut back = ptr::null_mut();
        assert_eq!(fp_poly_exact_div(out, q, &mut back), FpStatus::Ok);
        assert!(fp_poly_equal(back, p));
        let mut divides = false;
        assert_eq!(fp_poly_divides(p, out, &mut divides), FpStatus::Ok);
        assert!(divides);

        let mut sum = ptr::null_mut();
        assert_eq!(fp_poly_add(p, q, &mut sum), FpStatus::Ok);
        assert_eq!(render(sum), "2*x");
        let mut comp = ptr::null_mut();
        assert_eq!(fp_poly_compose(out, p, &mut comp), FpStatus::Ok);
        assert_eq!(render(comp), "x^2 + 2*x");

        let mut bad = ptr::null_mut();
        assert_eq!(fp_poly_exact_div(p, sum, &mut bad), FpStatus::DivisionError);
        assert!(bad.is_null());
        let zero = parse("0");
        assert_eq!(fp_poly_exact_div(p, zero, &mut bad), FpStatus::DomainError);

        for h in [p, q, out, back, sum, comp, zero] {
            fp_poly_free(h);
        }
    }
}

#[test]
fn families() {
    let cases = [
        (FpFamily::Forest, 4, "x^4 + 8*x^3 + 20*x^2 + 16*x"),
        (FpFamily::FactoredForest, 4, "x^4 + 8*x^3 + 20*x^2 + 16*x"),
        (FpFamily::OrientedForest, 3, "x^3 + 3*x^2 + 3*x"),
        (FpFamily::FactoredOrientedForest, 3, "x^3 + 3*x^2 + 3*x"),
        (FpFamily::Cyclotomic, 6, "x^2 - x + 1"),
        (FpFamily::Chebyshev, 2, "2*x^2 - 1"),
        (FpFamily::Psi, 2, "x + 2"),
    ];
    for (family, n, want) in cases {
        let mut p = ptr::null_mut();
        assert_eq!(unsafe { fp_family_poly(family, n, &mut p) }, FpStatus::Ok);
        assert_eq!(render(p), want, "{family:?} {n}");
        unsafe { fp_poly_free(p) };
    }
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { fp_family_poly(FpFamily::Forest, 0, &mut p) }, FpStatus::DomainError);
}

#[test]
fn sunlet_graphs() {
    let (a, b) = (parse("x"), parse("1"));
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(fp_graph_sunlet(5, false, a, b, &mut g), FpStatus::Ok);
        let mut det = ptr::null_mut();
        assert_eq!(fp_graph_forest_sum(g, &mut det), FpStatus::Ok);
        assert_eq!(render(det), "x^5 + 10*x^4 + 35*x^3 + 50*x^2 + 25*x");
        let (mut sum, mut count) = (ptr::null_mut(), 0u64);
        assert_eq!(fp_graph_enumerate(g, 22, &mut sum, &mut count), FpStatus::Ok);
        assert!(fp_poly_equal(sum, det));
        assert_eq!(count, 121);
        let mut capped = ptr::null_mut();
        assert_eq!(fp_graph_enumerate(g, 4, &mut capped, ptr::null_mut()), FpStatus::CapExceeded);
        fp_graph_free(g);

        let mut o = ptr::null_mut();
        assert_eq!(fp_graph_sunlet(4, true, a, b, &mut o), FpStatus::Ok);
        let mut osum = ptr::null_mut();
        assert_eq!(fp_graph_forest_sum(o, &mut osum), FpStatus::Ok);
        assert_eq!(render(osum), "x^4 + 4*x^3 + 6*x^2 + 4*x");
        fp_graph_free(o);

        let mut small = ptr::null_mut();
        assert_eq!(fp_graph_sunlet(2, false, a, b, &mut small), FpStatus::DomainError);

        for h in [a, b, det, sum, osum] {
            fp_poly_free(h);
        }
    }
}

#[test]
fn graph_from_json() {
    let json = CString::new(
        r#"{"vertices": [{"id": "r", "node": true}, {"id": "s"}, {"id": "t"}],
            "edges": [{"u": "r", "v": "s", "weight": "x"}, {"u": "s", "v": "t", "weight": "2"}]}"#,
    )
    .unwrap();
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(fp_graph_from_json(json.as_ptr(), &mut g), FpStatus::Ok);
        let mut p = ptr::null_mut();
        assert_eq!(fp_graph_forest_sum(g, &mut p), FpStatus::Ok);
        // path r - s - t rooted at r: only the spanning tree itself
        assert_eq!(render(p), "2*x");
        fp_poly_free(p);
        fp_graph_free(g);

        let broken = CString::new("{").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(fp_graph_from_json(broken.as_ptr(), &mut g), FpStatus::ParseError);
        assert!(g.is_null());
    }
}

#[test]
fn verify_suite_json() {
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { fp_verify_suite(6, &mut json) }, FpStatus::Ok);
    let reports: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    let reports = reports.as_array().unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["passed"] == true));
}

#[test]
fn null_pointers_are_reported() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(fp_poly_parse(ptr::null(), &mut p), FpStatus::NullPointer);
        let x = parse("x");
        assert_eq!(fp_poly_add(x, ptr::null(), &mut p), FpStatus::NullPointer);
        assert_eq!(fp_poly_add(x, x, ptr::null_mut()), FpStatus::NullPointer);
        assert!(fp_poly_to_string(ptr::null()).is_null());
        assert_eq!(fp_verify_suite(3, ptr::null_mut()), FpStatus::NullPointer);
        assert!(!last_error().is_empty());
        fp_poly_free(ptr::null_mut());
        fp_graph_free(ptr::null_mut());
        fp_string_free(ptr::null_mut());
        fp_poly_free(x);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/forestpoly.h")).unwrap();
    for name in ["fp_poly_parse", "fp_graph_forest_sum", "fp_verify_suite", "FP_STATUS_CAP_EXCEEDED", "typedef struct FpPoly FpPoly"] {
        assert!(header.contains(name), "header is missing {name}");
    }
}

/// Compiles a small C program against the generated header and the static
/// library, then runs it. Skipped when no C compiler is on the path.
#[test]
fn c_program_links_and_runs() {
    use std::process::Command;

    let Some(cc) = which_cc() else {
        eprintln!("no C compiler found, skipping");
        return;
    };
    let manifest = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    // tests run from target/<profile>/deps
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libforestpoly_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built, skipping", lib.display());
        return;
    }
    let exe = std::env::temp_dir().join(format!("forestpoly-smoke-{}", std::process::id()));
    let status = Command::new(cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(&exe);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "x^3 + 6*x^2 + 9*x\n");
}

fn which_cc() -> Option<&'static str> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| std::process::Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
}
