use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use hurwitz_ce_ffi::*;

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { hce_string_free(p) };
    s
}

fn last_error() -> String {
    let p = hce_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn kappa_matches_library() {
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { hce_kappa(4, 0, 0, true, 0, &mut out) },
        HceStatus::Ok
    );
    assert_eq!(take_string(out), "2 * g + -2");
    assert!(hce_last_error().is_null());

    let status = unsafe { hce_kappa(6, 0, 5, false, 0, &mut out) };
    assert_eq!(status, HceStatus::InvalidArgument);
    assert!(!last_error().is_empty());
}

#[test]
fn codimensions() {
    let mut c = 0;
    let (e, f) = ([1i64, 4, 4], [2i64, 7]);
    assert_eq!(
        unsafe { hce_codim_hurwitz4(e.as_ptr(), f.as_ptr(), &mut c) },
        HceStatus::Ok
    );
    assert_eq!(c, 2);
    assert_eq!(
        unsafe { hce_codim_simultaneous(e.as_ptr(), 3, f.as_ptr(), 2, &mut c) },
        HceStatus::Ok
    );
    assert_eq!(c, 4 + 4);

    let (e, f) = ([3i64, 3, 3, 3], [4i64, 5, 5, 5, 5]);
    assert_eq!(
        unsafe { hce_codim_hurwitz5(e.as_ptr(), f.as_ptr(), 8, &mut c) },
        HceStatus::Ok
    );
    assert_eq!(c, 0);
    assert_eq!(
        unsafe { hce_codim_hurwitz5(e.as_ptr(), f.as_ptr(), 9, &mut c) },
        HceStatus::InvalidArgument
    );

    let mut r = 0u64;
    assert_eq!(unsafe { hce_ce_rank(1, 5, &mut r) }, HceStatus::Ok);
    assert_eq!(r, 5);
}

#[test]
fn null_pointers_are_reported() {
    let f = [2i64, 7];
    let mut c = 0;
    assert_eq!(
        unsafe { hce_codim_hurwitz4(ptr::null(), f.as_ptr(), &mut c) },
        HceStatus::NullPointer
    );
    assert_eq!(
        unsafe { hce_ce_rank(1, 5, ptr::null_mut()) },
        HceStatus::NullPointer
    );
    assert_eq!(
        unsafe { hce_solve(ptr::null(), &mut ptr::null_mut()) },
        HceStatus::NullPointer
    );
    assert_eq!(unsafe { hce_solution_argmin_count(ptr::null()) }, 0);
    unsafe {
        hce_string_free(ptr::null_mut());
        hce_program_free(ptr::null_mut());
        hce_solution_free(ptr::null_mut());
    }
}

#[test]
fn preset_program_round_trip() {
    let name = CString::new("lemma_b4").unwrap();
    let mut program = ptr::null_mut();
    assert_eq!(
        unsafe { hce_program_preset(name.as_ptr(), &mut program) },
        HceStatus::Ok
    );
    let mut solution = ptr::null_mut();
    assert_eq!(unsafe { hce_solve(program, &mut solution) }, HceStatus::Ok);

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hce_solution_min(solution, &mut s) }, HceStatus::Ok);
    assert_eq!(take_string(s), "1/4");
    assert_eq!(unsafe { hce_solution_argmin_count(solution) }, 1);
    assert_eq!(
        unsafe { hce_solution_argmin(solution, 0, &mut s) },
        HceStatus::Ok
    );
    assert_eq!(take_string(s), r#"["1/4","3/8","3/8","1/2","1/2"]"#);
    assert_eq!(
        unsafe { hce_solution_argmin(solution, 1, &mut s) },
        HceStatus::InvalidArgument
    );

    unsafe {
        hce_solution_free(solution);
        hce_program_free(program);
    }

    let unknown = CString::new("lemma_b6").unwrap();
    assert_eq!(
        unsafe { hce_program_preset(unknown.as_ptr(), &mut program) },
        HceStatus::InvalidArgument
    );
}

#[test]
fn json_programs() {
    let json =
        CString::new(r#"{"vars": 1, "le": [[-1, 0], [1, "5/2"]], "obj": {"lin": [-1]}}"#).unwrap();
    let mut program = ptr::null_mut();
    assert_eq!(
        unsafe { hce_program_from_json(json.as_ptr(), &mut program) },
        HceStatus::Ok
    );
    let mut solution = ptr::null_mut();
    assert_eq!(unsafe { hce_solve(program, &mut solution) }, HceStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hce_solution_min(solution, &mut s) }, HceStatus::Ok);
    assert_eq!(take_string(s), "-5/2");
    unsafe {
        hce_solution_free(solution);
        hce_program_free(program);
    }

    let open = CString::new(r#"{"vars": 1, "le": [[-1, 0]], "obj": {"lin": [1, 0]}}"#).unwrap();
    assert_eq!(
        unsafe { hce_program_from_json(open.as_ptr(), &mut program) },
        HceStatus::InvalidArgument
    );

    let unbounded = CString::new(r#"{"vars": 1, "le": [[-1, 0]], "obj": {"lin": [-1]}}"#).unwrap();
    assert_eq!(
        unsafe { hce_program_from_json(unbounded.as_ptr(), &mut program) },
        HceStatus::Ok
    );
    assert_eq!(
        unsafe { hce_solve(program, &mut solution) },
        HceStatus::Infeasible
    );
    unsafe { hce_program_free(program) };

    let garbage = CString::new("{").unwrap();
    assert_eq!(
        unsafe { hce_program_from_json(garbage.as_ptr(), &mut program) },
        HceStatus::InvalidArgument
    );
}

#[test]
fn bounds_and_strata() {
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { hce_bound(4, 19, HceBoundCase::BCirc, &mut s) },
        HceStatus::Ok
    );
    assert_eq!(take_string(s), "3/2");
    assert_eq!(
        unsafe { hce_bound(5, 104, HceBoundCase::HCirc, &mut s) },
        HceStatus::Ok
    );
    assert_eq!(take_string(s), "28/5");

    let filter = CString::new("irreducible").unwrap();
    assert_eq!(
        unsafe { hce_strata4_json(6, filter.as_ptr(), &mut s) },
        HceStatus::Ok
    );
    let rows: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0]["codim"], 0);

    let bad = CString::new("sideways").unwrap();
    assert_eq!(
        unsafe { hce_strata4_json(6, bad.as_ptr(), &mut s) },
        HceStatus::InvalidArgument
    );
}

fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

/// `target/<profile>`, found from the test binary in `target/<profile>/deps`.
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_compiles_as_c() {
    let header = crate_dir().join("include/hurwitz_ce.h");
    let status = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-std=c11", "-x", "c"])
        .arg(&header)
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
}

#[test]
fn c_program_links_against_static_library() {
    let lib = profile_dir().join("libhurwitz_ce_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let out_dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let exe = out_dir.join("smoke");
    let status = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Werror", "-I"])
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
    let run = Command::new(&exe).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(
        String::from_utf8(run.stdout).unwrap(),
        "kappa_0 = 2 * g + -2\nmin = 1/4\ncodim = 2\n"
    );
}
