use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use linesym::corpus::get_case;
use linesym_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = ls_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    ls_string_free(p);
    s
}

#[test]
fn table_round_trip() {
    let case = get_case("{7}").unwrap();
    let src = c(case.cfg_source);
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(ls_table_parse(src.as_ptr(), &mut t), LsStatus::Ok);
        let mut n = 0;
        assert_eq!(ls_table_line_count(t, &mut n), LsStatus::Ok);
        assert_eq!(n, 10);
        let mut order = 0;
        assert_eq!(ls_table_aut_order(t, &mut order), LsStatus::Ok);
        assert_eq!(order, 24);
        ls_table_free(t);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut t = ptr::null_mut();
        let bad = c("lines three\n");
        assert_eq!(ls_table_parse(bad.as_ptr(), &mut t), LsStatus::Parse);
        assert!(t.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(ls_table_parse(ptr::null(), &mut t), LsStatus::NullArgument);
        let mut n = 0;
        assert_eq!(ls_table_line_count(ptr::null(), &mut n), LsStatus::NullArgument);
        let mut r = ptr::null_mut();
        let name = c("rybnikov");
        assert_eq!(ls_pipeline_run(name.as_ptr(), &mut r), LsStatus::UnknownCase);
        assert!(last_error().contains("rybnikov"));
        let mut s = ptr::null_mut();
        assert_eq!(ls_case_name(99, &mut s), LsStatus::OutOfRange);
        ls_table_free(ptr::null_mut());
        ls_string_free(ptr::null_mut());
    }
}

#[test]
fn reflection_through_handles() {
    let case = get_case("{1}").unwrap();
    let (plus, minus) = (c(case.plus_source), c(case.minus_source));
    unsafe {
        let (mut p, mut m) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(ls_arrangement_parse(plus.as_ptr(), &mut p), LsStatus::Ok);
        assert_eq!(ls_arrangement_parse(minus.as_ptr(), &mut m), LsStatus::Ok);
        let mut n = 0;
        assert_eq!(ls_arrangement_line_count(p, &mut n), LsStatus::Ok);
        assert_eq!(n, 10);

        // the reference relabelling as written in the plan's own frame
        let sigma = c(&case.sigma.to_string());
        let mut ok = false;
        assert_eq!(ls_verify_reflection(p, m, sigma.as_ptr(), false, &mut ok), LsStatus::Ok);
        assert!(ok);
        let id = c("()");
        let mut ok_id = true;
        assert_eq!(ls_verify_reflection(p, m, id.as_ptr(), false, &mut ok_id), LsStatus::Ok);
        assert!(!ok_id);

        let mut svg = ptr::null_mut();
        assert_eq!(ls_render_svg(p, 10, &mut svg), LsStatus::Ok);
        let svg = take_string(svg);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches(r#"class="line""#).count(), 9);
        let mut out = ptr::null_mut();
        assert_eq!(ls_render_svg(p, 11, &mut out), LsStatus::Render);

        ls_arrangement_free(p);
        ls_arrangement_free(m);
    }
}

#[test]
fn pipeline_reports() {
    assert_eq!(ls_case_count(), 9);
    unsafe {
        let mut name = ptr::null_mut();
        assert_eq!(ls_case_name(8, &mut name), LsStatus::Ok);
        let name = take_string(name);
        assert_eq!(name, "falk-sturmfels");
        for (case, expected) in [("{6}", LsOutcome::Success), (name.as_str(), LsOutcome::Failure)] {
            let case = c(case);
            let mut r = ptr::null_mut();
            assert_eq!(ls_pipeline_run(case.as_ptr(), &mut r), LsStatus::Ok);
            let mut outcome = LsOutcome::Inapplicable;
            assert_eq!(ls_report_outcome(r, &mut outcome), LsStatus::Ok);
            assert_eq!(outcome, expected);
            let mut json = ptr::null_mut();
            assert_eq!(ls_report_json(r, &mut json), LsStatus::Ok);
            let json: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
            let mut order = 0;
            assert_eq!(ls_report_aut_order(r, &mut order), LsStatus::Ok);
            assert_eq!(json["aut_order"], order);
            ls_report_free(r);
        }
    }
}

#[test]
fn header_is_valid_c() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = root.join("include/linesym.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["ls_table_parse", "ls_pipeline_run", "ls_render_svg", "ls_last_error_message", "typedef struct LsReport LsReport"] {
        assert!(text.contains(f), "{} missing from header", f);
    }
    let dir = tempfile::tempdir().unwrap();
    let main = dir.path().join("main.c");
    std::fs::write(
        &main,
        "#include \"linesym.h\"\nint main(void) { LsTable *t = 0; return ls_table_parse(\"\", &t) == LS_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(root.join("include"))
        .arg(&main)
        .status();
    match status {
        Ok(s) => assert!(s.success(), "header does not compile"),
        Err(e) => eprintln!("no C compiler available, syntax check skipped: {}", e),
    }
}
