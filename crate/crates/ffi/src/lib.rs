//! C interface to the `hurwitz-ce` library.
//!
//! Every entry point returns an [`HceStatus`] and writes its result through
//! an out-pointer. On failure a message is available from
//! [`hce_last_error`] on the same thread. Strings handed out by this
//! library are owned by the caller and must be released with
//! [`hce_string_free`]; programs and solutions are opaque handles with
//! their own free functions.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hurwitz_ce::ce::{ce_rank, CeError, CeSetup, Genus};
use hurwitz_ce::exact::format_rational;
use hurwitz_ce::pl::{bound, preset, solve, BoundCase, PLProgram, PLSolution, PlError};
use hurwitz_ce::splitting::{
    codim_hurwitz4, codim_hurwitz5, codim_simultaneous, enumerate_strata4, SplittingError,
    SplittingType, StrataFilter,
};

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HceStatus {
    Ok = 0,
    ComputationFailed = 1,
    InvalidArgument = 2,
    /// The program's feasible region is empty or unbounded.
    Infeasible = 3,
    NullPointer = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HceBoundCase {
    BCirc = 0,
    HCirc = 1,
}

/// A piecewise-linear program.
pub struct HceProgram(PLProgram);

/// The exact minimum of a program and every point attaining it.
pub struct HceSolution(PLSolution);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(HceStatus, String);

impl From<CeError> for Failure {
    fn from(e: CeError) -> Self {
        let status = match e {
            CeError::Exact(_) | CeError::Bundle(_) => HceStatus::ComputationFailed,
            _ => HceStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<SplittingError> for Failure {
    fn from(e: SplittingError) -> Self {
        Failure(HceStatus::InvalidArgument, e.to_string())
    }
}

impl From<PlError> for Failure {
    fn from(e: PlError) -> Self {
        let status = match e {
            PlError::Infeasible | PlError::Unbounded => HceStatus::Infeasible,
            PlError::NoFeasibleSample(_) => HceStatus::ComputationFailed,
            _ => HceStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure(HceStatus::InvalidArgument, message.into())
}

fn null(name: &str) -> Failure {
    Failure(HceStatus::NullPointer, format!("`{name}` is null"))
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> HceStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HceStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(format!("internal panic: {message}"));
            HceStatus::Panic
        }
    }
}

/// # Safety
/// `out` must be null or valid for a write of `T`.
unsafe fn write<T>(out: *mut T, name: &str, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(name));
    }
    unsafe { out.write(value) };
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(name));
    }
    unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|_| invalid(format!("`{name}` is not UTF-8")))
}

/// # Safety
/// `p` must be null or point to `len` readable values.
unsafe fn read_type(p: *const i64, len: usize, name: &str) -> Result<SplittingType, Failure> {
    if p.is_null() {
        return Err(null(name));
    }
    let parts = unsafe { std::slice::from_raw_parts(p, len) };
    Ok(SplittingType::new(parts.to_vec()))
}

/// Message describing the most recent failure on this thread, or null.
///
/// The pointer stays valid until the next call into this library from the
/// same thread. Do not free it.
#[no_mangle]
pub extern "C" fn hce_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hce_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// κ_i on the degree `k` Hurwitz space as a polynomial in the CE classes,
/// in text form.
///
/// With `symbolic` set, the genus is kept as the symbol `g` and `genus` is
/// ignored; otherwise a negative `genus` leaves it unspecialized. A
/// `truncation` of 0 selects `i + k + 2`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn hce_kappa(
    k: i64,
    i: u32,
    genus: i64,
    symbolic: bool,
    truncation: i64,
    out: *mut *mut c_char,
) -> HceStatus {
    guard(|| {
        let genus = match (symbolic, genus) {
            (true, _) => Genus::Symbolic,
            (false, g) if g < 0 => Genus::Unspecialized,
            (false, g) => Genus::Numeric(g),
        };
        let d = if truncation == 0 {
            i as i64 + k + 2
        } else {
            truncation
        };
        let kappa = CeSetup::new(k, genus, d)?.kappa(i)?;
        unsafe { write(out, "out", into_c_string(kappa.polynomial.to_string())) }
    })
}

/// Codimension of the degree 4 locus with Casnati–Ekedahl splitting types
/// `e` (3 entries) and `f` (2 entries).
///
/// # Safety
/// `e` and `f` must point to 3 and 2 readable values; `out` must be valid
/// for a write.
#[no_mangle]
pub unsafe extern "C" fn hce_codim_hurwitz4(
    e: *const i64,
    f: *const i64,
    out: *mut i64,
) -> HceStatus {
    guard(|| {
        let e = unsafe { read_type(e, 3, "e") }?;
        let f = unsafe { read_type(f, 2, "f") }?;
        let c = codim_hurwitz4(&e, &f)?;
        unsafe { write(out, "out", c) }
    })
}

/// Codimension of the degree 5 locus with splitting types `e` (4 entries)
/// and `f` (5 entries) in genus `g`.
///
/// # Safety
/// `e` and `f` must point to 4 and 5 readable values; `out` must be valid
/// for a write.
#[no_mangle]
pub unsafe extern "C" fn hce_codim_hurwitz5(
    e: *const i64,
    f: *const i64,
    g: i64,
    out: *mut i64,
) -> HceStatus {
    guard(|| {
        let e = unsafe { read_type(e, 4, "e") }?;
        let f = unsafe { read_type(f, 5, "f") }?;
        let c = codim_hurwitz5(&e, &f, g)?;
        unsafe { write(out, "out", c) }
    })
}

/// `h¹(End e) + h¹(End f)`.
///
/// # Safety
/// `e` and `f` must point to `e_len` and `f_len` readable values; `out`
/// must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hce_codim_simultaneous(
    e: *const i64,
    e_len: usize,
    f: *const i64,
    f_len: usize,
    out: *mut i64,
) -> HceStatus {
    guard(|| {
        let e = unsafe { read_type(e, e_len, "e") }?;
        let f = unsafe { read_type(f, f_len, "f") }?;
        unsafe { write(out, "out", codim_simultaneous(&e, &f)) }
    })
}

/// Rank of the `i`-th bundle in the resolution of a degree `k` cover.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn hce_ce_rank(i: i64, k: i64, out: *mut u64) -> HceStatus {
    guard(|| {
        let r = ce_rank(i, k)?;
        unsafe { write(out, "out", r) }
    })
}

/// Loads a built-in program by name (`lemma_b4`, `lemma_coh4`,
/// `lemma_b5circ`, `lemma_coh5`).
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be valid for a
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn hce_program_preset(
    name: *const c_char,
    out: *mut *mut HceProgram,
) -> HceStatus {
    guard(|| {
        let name = unsafe { read_str(name, "name") }?;
        let p = preset(name)?;
        unsafe { write(out, "out", Box::into_raw(Box::new(HceProgram(p)))) }
    })
}

/// Parses a program from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for a
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn hce_program_from_json(
    json: *const c_char,
    out: *mut *mut HceProgram,
) -> HceStatus {
    guard(|| {
        let text = unsafe { read_str(json, "json") }?;
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| invalid(format!("malformed JSON: {e}")))?;
        let p = PLProgram::from_json(&value)?;
        unsafe { write(out, "out", Box::into_raw(Box::new(HceProgram(p)))) }
    })
}

/// # Safety
/// `program` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hce_program_free(program: *mut HceProgram) {
    if !program.is_null() {
        drop(unsafe { Box::from_raw(program) });
    }
}

/// Exact minimum of `program`. Returns [`HceStatus::Infeasible`] when the
/// region is empty or unbounded.
///
/// # Safety
/// `program` must be a live handle; `out` must be valid for a pointer
/// write.
#[no_mangle]
pub unsafe extern "C" fn hce_solve(
    program: *const HceProgram,
    out: *mut *mut HceSolution,
) -> HceStatus {
    guard(|| {
        let program = unsafe { program.as_ref() }.ok_or_else(|| null("program"))?;
        let s = solve(&program.0)?;
        unsafe { write(out, "out", Box::into_raw(Box::new(HceSolution(s)))) }
    })
}

/// The minimum as a `"p/q"` string (or an integer).
///
/// # Safety
/// `solution` must be a live handle; `out` must be valid for a pointer
/// write.
#[no_mangle]
pub unsafe extern "C" fn hce_solution_min(
    solution: *const HceSolution,
    out: *mut *mut c_char,
) -> HceStatus {
    guard(|| {
        let s = unsafe { solution.as_ref() }.ok_or_else(|| null("solution"))?;
        unsafe { write(out, "out", into_c_string(format_rational(&s.0.min_value))) }
    })
}

/// Number of points attaining the minimum; 0 for a null handle.
///
/// # Safety
/// `solution` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hce_solution_argmin_count(solution: *const HceSolution) -> usize {
    unsafe { solution.as_ref() }.map_or(0, |s| s.0.argmin_points.len())
}

/// The `index`-th minimizer as a JSON array of `"p/q"` strings.
///
/// # Safety
/// `solution` must be a live handle; `out` must be valid for a pointer
/// write.
#[no_mangle]
pub unsafe extern "C" fn hce_solution_argmin(
    solution: *const HceSolution,
    index: usize,
    out: *mut *mut c_char,
) -> HceStatus {
    guard(|| {
        let s = unsafe { solution.as_ref() }.ok_or_else(|| null("solution"))?;
        let point =
            s.0.argmin_points
                .get(index)
                .ok_or_else(|| invalid(format!("index {index} out of range")))?;
        let json: Vec<String> = point.iter().map(format_rational).collect();
        let text = serde_json::to_string(&json).expect("strings serialize");
        unsafe { write(out, "out", into_c_string(text)) }
    })
}

/// # Safety
/// `solution` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hce_solution_free(solution: *mut HceSolution) {
    if !solution.is_null() {
        drop(unsafe { Box::from_raw(solution) });
    }
}

/// Codimension lower bound for degree `k` covers of genus `g`, as a
/// `"p/q"` string.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn hce_bound(
    k: i64,
    g: i64,
    case: HceBoundCase,
    out: *mut *mut c_char,
) -> HceStatus {
    guard(|| {
        let case = match case {
            HceBoundCase::BCirc => BoundCase::BCirc,
            HceBoundCase::HCirc => BoundCase::HCirc,
        };
        let b = bound(k, g, case)?;
        unsafe { write(out, "out", into_c_string(format_rational(&b))) }
    })
}

/// Degree 4 strata of genus `g` as a JSON array. `filter` is `all`,
/// `irreducible` or `non_factoring`.
///
/// # Safety
/// `filter` must be a NUL-terminated string; `out` must be valid for a
/// pointer write.
#[no_mangle]
pub unsafe extern "C" fn hce_strata4_json(
    g: i64,
    filter: *const c_char,
    out: *mut *mut c_char,
) -> HceStatus {
    guard(|| {
        let filter: StrataFilter = unsafe { read_str(filter, "filter") }?
            .parse()
            .map_err(invalid)?;
        let rows = enumerate_strata4(g, filter)?;
        let text = serde_json::to_string(&rows).expect("records serialize");
        unsafe { write(out, "out", into_c_string(text)) }
    })
}
