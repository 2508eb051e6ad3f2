use std::ffi::{CStr, CString};
use std::ptr;

use sugra_bv_ffi::*;

fn run_json(json: &str) -> (SbvStatus, *mut SbvReport) {
    let cfg = CString::new(json).unwrap();
    let mut report = ptr::null_mut();
    let status = unsafe { sbv_run_json(cfg.as_ptr(), &mut report) };
    (status, report)
}

fn last_error() -> String {
    let p = sbv_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn passing_run_round_trips() {
    let (status, report) = run_json(r#"{"suites": ["flip"], "cases": 2, "seed": 3}"#);
    assert_eq!(status, SbvStatus::Ok);
    unsafe {
        assert_eq!(sbv_report_exit_code(report), 0);
        assert_eq!(sbv_report_failure_count(report), 0);
        let n = sbv_report_check_count(report);
        assert_eq!(n, 2 * 4 * 5);

        let mut s = ptr::null_mut();
        assert_eq!(sbv_report_render(report, SbvFormat::Json, &mut s), SbvStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        sbv_string_free(s);
        assert_eq!(text.lines().count(), n);
        let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        assert_eq!(first["suite"], "flip");

        assert_eq!(sbv_report_render(report, SbvFormat::Text, &mut s), SbvStatus::Ok);
        assert!(CStr::from_ptr(s).to_str().unwrap().contains("flip: 40 checks, 0 failed"));
        sbv_string_free(s);
        sbv_report_free(report);
    }
}

#[test]
fn failing_check_sets_exit_code() {
    let (status, report) = run_json(r#"{"suites": ["gamma_identities"]}"#);
    assert_eq!(status, SbvStatus::Ok);
    unsafe {
        assert_eq!(sbv_report_exit_code(report), 1);
        assert!(sbv_report_failure_count(report) > 0);
        sbv_report_free(report);
    }
}

#[test]
fn errors_are_reported() {
    let (status, report) = run_json("{not json");
    assert_eq!(status, SbvStatus::InvalidJson);
    assert!(report.is_null());

    let (status, report) = run_json(r#"{"suites": ["nope"]}"#);
    assert_eq!(status, SbvStatus::InvalidConfig);
    assert!(report.is_null());
    assert!(last_error().contains("nope"));

    let (status, _) = run_json(r#"{"suites": ["cme"], "jet_order": 1}"#);
    assert_eq!(status, SbvStatus::InvalidConfig);
    assert!(last_error().contains("jet order"));

    let mut report = ptr::null_mut();
    assert_eq!(unsafe { sbv_run_json(ptr::null(), &mut report) }, SbvStatus::NullPointer);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sbv_report_render(ptr::null(), SbvFormat::Json, &mut s) }, SbvStatus::NullPointer);
    assert_eq!(unsafe { sbv_report_exit_code(ptr::null()) }, -1);
    unsafe {
        sbv_report_free(ptr::null_mut());
        sbv_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/sugra_bv.h")).unwrap();
    for name in ["sbv_run_json", "sbv_report_render", "sbv_report_free", "sbv_string_free", "sbv_last_error", "SBV_STATUS_INVALID_CONFIG"] {
        assert!(header.contains(name), "{name} missing from header");
    }
    let v = unsafe { CStr::from_ptr(sbv_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let src = std::env::temp_dir().join(format!("sugra_bv_header_{}.c", std::process::id()));
    std::fs::write(
        &src,
        "#include \"sugra_bv.h\"\nint main(void) { SbvReport *r = 0; return sbv_run_json(\"{}\", &r) == SBV_STATUS_OK ? sbv_report_exit_code(r) : 2; }\n",
    )
    .unwrap();
    let out = match std::process::Command::new("cc").args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"]).arg(format!("{dir}/include")).arg(&src).output() {
        Ok(o) => o,
        Err(_) => {
            eprintln!("no C compiler, header not compiled");
            return;
        }
    };
    let _ = std::fs::remove_file(&src);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
