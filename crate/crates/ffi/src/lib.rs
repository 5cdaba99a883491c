//! C interface. Graphs and covers cross the boundary as JSON in the same
//! formats the command line reads, and live behind opaque handles.
//!
//! Every fallible function returns a [`DrStatus`]; on failure the message is
//! available from [`dr_last_error`] until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use davis_rigidity::counterexample::{first_strong_witness, gen_strongly_repetitive_pair, RepetitiveGeneratorParams};
use davis_rigidity::cover::{
    attach_hats, find_label_iso, homeomorphism_verdict, homotopy_certificate, validate_cover, RawCover,
    SingularCover,
};
use davis_rigidity::error::{CoverError, Error};
use davis_rigidity::graph::ThetaCycle;
use davis_rigidity::io::canonical_json;
use davis_rigidity::orbicomplex::jester_hat_cover;
use davis_rigidity::rigidity::cycle_count_vectors;

/// A cycle of generalized theta graphs.
pub struct DrGraph(ThetaCycle);

/// A validated cover of the singular set.
pub struct DrCover(SingularCover);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Json = 3,
    InvalidGraph = 4,
    InvalidCover = 5,
    InvalidHat = 6,
    Generator = 7,
    Internal = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let message = CString::new(message.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn fail(status: DrStatus, message: impl Into<String>) -> DrStatus {
    set_error(message);
    status
}

fn status_of(e: &Error) -> DrStatus {
    match e {
        Error::Graph(_) => DrStatus::InvalidGraph,
        Error::Cover(_) => DrStatus::InvalidCover,
        Error::Hat(_) => DrStatus::InvalidHat,
        Error::Generator(_) => DrStatus::Generator,
        Error::Json { .. } => DrStatus::Json,
        _ => DrStatus::Internal,
    }
}

fn from_error(e: impl Into<Error>) -> DrStatus {
    let e = e.into();
    fail(status_of(&e), e.to_string())
}

/// Message for the last failure on this thread, or NULL. Owned by the
/// library; valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn dr_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, DrStatus> {
    if s.is_null() {
        return Err(fail(DrStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|e| fail(DrStatus::InvalidUtf8, e.to_string()))
}

fn write_string(text: String, out: *mut *mut c_char) -> DrStatus {
    match CString::new(text) {
        Ok(s) => {
            // SAFETY: callers check `out` for null before building `text`.
            unsafe { *out = s.into_raw() };
            DrStatus::Ok
        }
        Err(e) => fail(DrStatus::Internal, e.to_string()),
    }
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(DrStatus::NullPointer, concat!(stringify!($p), " is null"));
        })+
    };
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph file body, e.g. `{"thetas": [[3,3],[3,5],[4],[3,4]]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dr_graph_from_json(json: *const c_char, out: *mut *mut DrGraph) -> DrStatus {
    clear_error();
    non_null!(out);
    let text = match read_str(json) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match serde_json::from_str::<ThetaCycle>(text) {
        Ok(graph) => {
            *out = Box::into_raw(Box::new(DrGraph(graph)));
            DrStatus::Ok
        }
        Err(e) => fail(DrStatus::Json, e.to_string()),
    }
}

/// # Safety
/// `graph` must be NULL or a handle from [`dr_graph_from_json`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dr_graph_free(graph: *mut DrGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of thetas `N`.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dr_graph_len(graph: *const DrGraph, out: *mut usize) -> DrStatus {
    clear_error();
    non_null!(graph, out);
    *out = (*graph).0.len();
    DrStatus::Ok
}

/// Parses and validates a cover file body, against `graph` unless it is NULL.
///
/// # Safety
/// `json` must be a NUL-terminated string; `graph` NULL or a live handle;
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dr_cover_from_json(
    json: *const c_char,
    graph: *const DrGraph,
    out: *mut *mut DrCover,
) -> DrStatus {
    clear_error();
    non_null!(out);
    let text = match read_str(json) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let raw: RawCover = match serde_json::from_str(text) {
        Ok(raw) => raw,
        Err(e) => return fail(DrStatus::Json, e.to_string()),
    };
    let report = validate_cover(&raw, graph.as_ref().map(|g| &g.0));
    if !report.valid {
        return from_error(CoverError::Invalid(report.violations));
    }
    match SingularCover::from_raw(&raw) {
        Ok(cover) => {
            *out = Box::into_raw(Box::new(DrCover(cover)));
            DrStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// # Safety
/// `cover` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dr_cover_free(cover: *mut DrCover) {
    if !cover.is_null() {
        drop(Box::from_raw(cover));
    }
}

/// Number of sheets `d`.
///
/// # Safety
/// `cover` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dr_cover_degree(cover: *const DrCover, out: *mut usize) -> DrStatus {
    clear_error();
    non_null!(cover, out);
    *out = (*cover).0.degree();
    DrStatus::Ok
}

/// Canonical cover file body. Free with [`dr_string_free`].
///
/// # Safety
/// `cover` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dr_cover_to_json(cover: *const DrCover, out: *mut *mut c_char) -> DrStatus {
    clear_error();
    non_null!(cover, out);
    write_string(canonical_json(&(*cover).0), out)
}

/// Cone points of the jester hat covering an orbifold with `r` reflection
/// edges in degree `d`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dr_jester_hat_cover(r: u64, d: u64, out: *mut u64) -> DrStatus {
    clear_error();
    non_null!(out);
    match jester_hat_cover(r, d) {
        Ok(hat) => {
            *out = hat.cone_points;
            DrStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Homotopy certificate of `cover` over `graph` as JSON.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dr_certificate_json(
    graph: *const DrGraph,
    cover: *const DrCover,
    out: *mut *mut c_char,
) -> DrStatus {
    clear_error();
    non_null!(graph, cover, out);
    match attach_hats(&(*cover).0, &(*graph).0) {
        Ok(x) => write_string(canonical_json(&homotopy_certificate(&x)), out),
        Err(e) => from_error(e),
    }
}

/// Cycle count vectors of `cover` as JSON.
///
/// # Safety
/// `cover` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dr_cycle_vectors_json(cover: *const DrCover, out: *mut *mut c_char) -> DrStatus {
    clear_error();
    non_null!(cover, out);
    write_string(canonical_json(&cycle_count_vectors(&(*cover).0)), out)
}

/// Whether two covers have a label-preserving isomorphism.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dr_label_isomorphic(a: *const DrCover, b: *const DrCover, out: *mut bool) -> DrStatus {
    clear_error();
    non_null!(a, b, out);
    *out = find_label_iso(&(*a).0, &(*b).0).is_some();
    DrStatus::Ok
}

/// Compares two orbicomplex covers: equal homotopy certificates and homeomorphism.
///
/// # Safety
/// Handles must be live; the output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn dr_compare(
    graph_a: *const DrGraph,
    cover_a: *const DrCover,
    graph_b: *const DrGraph,
    cover_b: *const DrCover,
    certificates_equal: *mut bool,
    homeomorphic: *mut bool,
) -> DrStatus {
    clear_error();
    non_null!(graph_a, cover_a, graph_b, cover_b, certificates_equal, homeomorphic);
    let xa = match attach_hats(&(*cover_a).0, &(*graph_a).0) {
        Ok(x) => x,
        Err(e) => return from_error(e),
    };
    let xb = match attach_hats(&(*cover_b).0, &(*graph_b).0) {
        Ok(x) => x,
        Err(e) => return from_error(e),
    };
    *certificates_equal = homotopy_certificate(&xa) == homotopy_certificate(&xb);
    *homeomorphic = homeomorphism_verdict(&xa, &xb).homeomorphic;
    DrStatus::Ok
}

/// Homotopic, non-homeomorphic pair over a strongly repetitive graph, from
/// its first strong witness.
///
/// # Safety
/// `graph` must be a live handle; `out_a` and `out_b` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dr_gen_repetitive_pair(
    graph: *const DrGraph,
    out_a: *mut *mut DrCover,
    out_b: *mut *mut DrCover,
) -> DrStatus {
    clear_error();
    non_null!(graph, out_a, out_b);
    let graph = &(*graph).0;
    let report = first_strong_witness(graph)
        .and_then(|w| RepetitiveGeneratorParams::normalize(graph, w))
        .and_then(|params| gen_strongly_repetitive_pair(&params));
    let covers = report.map_err(Error::from).and_then(|r| r.singular_covers().map_err(Error::from));
    match covers {
        Ok((a, b)) => {
            *out_a = Box::into_raw(Box::new(DrCover(a)));
            *out_b = Box::into_raw(Box::new(DrCover(b)));
            DrStatus::Ok
        }
        Err(e) => from_error(e),
    }
}
