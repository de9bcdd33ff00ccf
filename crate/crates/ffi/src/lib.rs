//! C ABI for the `leavitt` classifier.
//!
//! Graphs cross the boundary as opaque [`LeavittGraph`] handles. Every call
//! returns a [`LeavittStatus`]; on failure, [`leavitt_last_error`] gives a
//! message for the calling thread. Strings returned through `out` pointers
//! are owned by the caller and released with [`leavitt_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use leavitt::closure::brute_force_lattice;
use leavitt::lie::{
    is_graded_simple, is_lie_nilpotent, is_lie_simple, is_lie_solvable, is_simple_lpa,
    one_in_commutator,
};
use leavitt::monoid::composition_series;
use leavitt::{
    gk_dimension, hsat_lattice, ClassificationReport, Error, FieldChar, GkValue, Graph,
    LatticeConfig,
};

/// `*out` value of [`leavitt_gk_dimension`] for infinite GK-dimension.
pub const LEAVITT_GK_INFINITE: i32 = -1;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeavittStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidChar = 4,
    EmptyGraph = 5,
    Disconnected = 6,
    LatticeBound = 7,
    Inconsistent = 8,
    Panic = 9,
    Other = 10,
}

/// An immutable parsed graph.
pub struct LeavittGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(LeavittStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::DuplicateVertex { .. }
            | Error::DuplicateEdge { .. }
            | Error::UndeclaredVertex { .. }
            | Error::Malformed { .. }
            | Error::Json(_) => LeavittStatus::Parse,
            Error::InvalidCharacteristic(_) => LeavittStatus::InvalidChar,
            Error::EmptyGraph => LeavittStatus::EmptyGraph,
            Error::Disconnected => LeavittStatus::Disconnected,
            Error::LatticeBound { .. } => LeavittStatus::LatticeBound,
            Error::Inconsistent(_) => LeavittStatus::Inconsistent,
            _ => LeavittStatus::Other,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(LeavittStatus::NullPointer, format!("`{what}` is null"))
}

/// Runs `body`, converting errors and panics into a status and last-error.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> LeavittStatus {
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|payload| {
        let message = payload
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| payload.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "panic".to_string());
        Err(Failure(LeavittStatus::Panic, message))
    });
    match outcome {
        Ok(()) => LeavittStatus::Ok,
        Err(Failure(status, message)) => {
            set_last_error(message);
            status
        }
    }
}

unsafe fn graph_ref<'a>(g: *const LeavittGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph"))
}

unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(LeavittStatus::InvalidUtf8, format!("`{what}`: {e}")))
}

fn char_arg(p: u64) -> Result<FieldChar, Failure> {
    FieldChar::new(p).map_err(Failure::from)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> Result<(), Failure> {
    let c = CString::new(text).map_err(|e| Failure(LeavittStatus::Other, e.to_string()))?;
    write(out, c.into_raw())
}

unsafe fn parse_into(
    text: *const c_char,
    out: *mut *mut LeavittGraph,
    json: bool,
) -> LeavittStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = str_arg(text, "text")?;
        let graph = if json {
            Graph::from_json(text)?
        } else {
            Graph::parse(text)?
        };
        write(out, Box::into_raw(Box::new(LeavittGraph { graph })))
    })
}

/// Parses the line-oriented text format (`vertex <id>`, `edge <id> <src> <dst>`).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leavitt_graph_parse(
    text: *const c_char,
    out: *mut *mut LeavittGraph,
) -> LeavittStatus {
    parse_into(text, out, false)
}

/// Parses `{"vertices":[...],"edges":[{"id":..,"src":..,"dst":..}]}`.
///
/// # Safety
/// As [`leavitt_graph_parse`].
#[no_mangle]
pub unsafe extern "C" fn leavitt_graph_parse_json(
    text: *const c_char,
    out: *mut *mut LeavittGraph,
) -> LeavittStatus {
    parse_into(text, out, true)
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from a parse call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn leavitt_graph_free(g: *mut LeavittGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leavitt_graph_vertex_count(
    g: *const LeavittGraph,
    out: *mut usize,
) -> LeavittStatus {
    guard(|| write(out, graph_ref(g)?.vertex_count()))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leavitt_graph_edge_count(
    g: *const LeavittGraph,
    out: *mut usize,
) -> LeavittStatus {
    guard(|| write(out, graph_ref(g)?.edge_count()))
}

/// GK-dimension, or [`LEAVITT_GK_INFINITE`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leavitt_gk_dimension(
    g: *const LeavittGraph,
    out: *mut i32,
) -> LeavittStatus {
    guard(|| {
        let value = match gk_dimension(graph_ref(g)?).value {
            GkValue::Finite(d) => d as i32,
            GkValue::Infinite => LEAVITT_GK_INFINITE,
        };
        write(out, value)
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leavitt_is_simple(
    g: *const LeavittGraph,
    out: *mut bool,
) -> LeavittStatus {
    guard(|| write(out, is_simple_lpa(graph_ref(g)?)?.verdict))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leavitt_is_graded_simple(
    g: *const LeavittGraph,
    out: *mut bool,
) -> LeavittStatus {
    guard(|| write(out, is_graded_simple(graph_ref(g)?)?))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leavitt_lie_solvable(
    g: *const LeavittGraph,
    p: u64,
    out: *mut bool,
) -> LeavittStatus {
    guard(|| write(out, is_lie_solvable(graph_ref(g)?, char_arg(p)?).verdict))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leavitt_lie_nilpotent(
    g: *const LeavittGraph,
    out: *mut bool,
) -> LeavittStatus {
    guard(|| write(out, is_lie_nilpotent(graph_ref(g)?)?.verdict))
}

/// Simplicity of the commutator Lie algebra; connected graphs only.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leavitt_lie_simple(
    g: *const LeavittGraph,
    p: u64,
    out: *mut bool,
) -> LeavittStatus {
    guard(|| write(out, is_lie_simple(graph_ref(g)?, char_arg(p)?)?.verdict))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leavitt_one_in_commutator(
    g: *const LeavittGraph,
    p: u64,
    out: *mut bool,
) -> LeavittStatus {
    guard(|| write(out, one_in_commutator(graph_ref(g)?, char_arg(p)?)))
}

/// The full classification report as pretty JSON, identical to the CLI's.
///
/// # Safety
/// `g` must be a live handle; `id` a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn leavitt_classify_json(
    g: *const LeavittGraph,
    id: *const c_char,
    p: u64,
    out: *mut *mut c_char,
) -> LeavittStatus {
    guard(|| {
        let report = ClassificationReport::build(str_arg(id, "id")?, graph_ref(g)?, char_arg(p)?)?;
        write_string(out, format!("{:#}", report.to_json()))
    })
}

/// The hereditary saturated lattice as JSON. `exhaustive` forces the
/// brute-force enumeration; otherwise the size bound picks the method.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leavitt_lattice_json(
    g: *const LeavittGraph,
    exhaustive: bool,
    out: *mut *mut c_char,
) -> LeavittStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let lattice = if exhaustive {
            brute_force_lattice(g)
        } else {
            hsat_lattice(g, &LatticeConfig::from_env())?
        };
        write_string(out, format!("{:#}", lattice.to_json(g)))
    })
}

/// The composition series as `{"chain":[...],"types":[...]}`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn leavitt_series_json(
    g: *const LeavittGraph,
    out: *mut *mut c_char,
) -> LeavittStatus {
    guard(|| {
        let g = graph_ref(g)?;
        write_string(out, composition_series(g)?.to_json(g).to_string())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn leavitt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn leavitt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn leavitt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
