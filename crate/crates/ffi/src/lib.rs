//! C interface to `linecons`.
//!
//! Graphs cross the boundary as opaque [`LcGraph`] handles built from JSON.
//! Every fallible function returns an [`LcStatus`]; on failure a message is
//! available from [`lc_last_error_message`] on the same thread. Strings
//! returned through `char **` out-parameters are owned by the caller and must
//! be released with [`lc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use linecons::crosscheck::evaluate_all;
use linecons::io::{export_dot, read_signed_graph, to_json, write_marked_graph, write_signed_graph};
use linecons::{
    check_condition_i, check_condition_ii, check_condition_iii, check_simple_criterion, classify_structure,
    is_consistent_oracle, line_graph, AnalysisError, Method, Multigraph, SignedGraph, Verdict,
};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The JSON document was malformed or described an invalid graph.
    InvalidGraph = 3,
    /// The simple-graph criterion was asked about a graph with parallel edges.
    NotSimple = 4,
    /// The graph has too many circles for the brute-force oracle.
    TooManyCircles = 5,
    /// The methods disagree with each other or produced an invalid witness.
    Disagreement = 6,
    /// An unexpected internal failure.
    Internal = 7,
}

/// Decision procedures, in the order the CLI lists them.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcMethod {
    ConditionI = 0,
    ConditionIi = 1,
    ConditionIii = 2,
    SimpleCriterion = 3,
    Structure = 4,
    Oracle = 5,
}

/// A signed multigraph.
pub struct LcGraph {
    graph: SignedGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', "\\0")).expect("NUL bytes were escaped");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

type Failure = (LcStatus, String);

fn run(f: impl FnOnce() -> Result<(), Failure>) -> LcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LcStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(panic) => {
            let what = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal error: {what}"));
            LcStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    (LcStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn graph_ref<'a>(graph: *const LcGraph) -> Result<&'a SignedGraph, Failure> {
    graph.as_ref().map(|g| &g.graph).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| (LcStatus::Internal, e.to_string()))?;
    write_out(out, c.into_raw())
}

fn verdict(g: &SignedGraph, method: LcMethod) -> Result<Verdict, Failure> {
    Ok(match method {
        LcMethod::ConditionI => check_condition_i(g),
        LcMethod::ConditionIi => check_condition_ii(g),
        LcMethod::ConditionIii => check_condition_iii(g),
        LcMethod::Structure => classify_structure(g).to_verdict(g),
        LcMethod::SimpleCriterion => check_simple_criterion(g).map_err(|e| match e {
            AnalysisError::NotSimple(..) => (LcStatus::NotSimple, e.to_string()),
            other => (LcStatus::Internal, other.to_string()),
        })?,
        LcMethod::Oracle => {
            let found = is_consistent_oracle(&line_graph(g)).map_err(|e| (LcStatus::TooManyCircles, e.to_string()))?;
            Verdict {
                method: Method::Oracle,
                line_consistent: found.consistent,
                failed_clause: None,
                witness: found.witness,
            }
        }
    })
}

/// Parses a graph from a NUL-terminated JSON document and stores a new handle
/// in `*out`. Release it with [`lc_graph_free`].
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_graph_from_json(json: *const c_char, out: *mut *mut LcGraph) -> LcStatus {
    run(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json).to_str().map_err(|e| (LcStatus::InvalidUtf8, e.to_string()))?;
        let graph = read_signed_graph(text).map_err(|e| (LcStatus::InvalidGraph, e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(LcGraph { graph })))
    })
}

/// Releases a graph handle. NULL is ignored.
///
/// # Safety
/// `graph` must come from [`lc_graph_from_json`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lc_graph_free(graph: *mut LcGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_graph_vertex_count(graph: *const LcGraph, out: *mut usize) -> LcStatus {
    run(|| write_out(out, graph_ref(graph)?.topology().vertex_count()))
}

/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_graph_edge_count(graph: *const LcGraph, out: *mut usize) -> LcStatus {
    run(|| write_out(out, graph_ref(graph)?.topology().edge_count()))
}

/// Decides line consistency with one method and stores the answer in
/// `*out_consistent`.
///
/// # Safety
/// `graph` must be a live handle and `out_consistent` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_check(graph: *const LcGraph, method: LcMethod, out_consistent: *mut bool) -> LcStatus {
    run(|| write_out(out_consistent, verdict(graph_ref(graph)?, method)?.line_consistent))
}

/// Like [`lc_check`], but returns the whole verdict as JSON: the method, the
/// answer, the failed clause and a witness circle of the line graph.
///
/// # Safety
/// `graph` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_check_json(
    graph: *const LcGraph,
    method: LcMethod,
    out_json: *mut *mut c_char,
) -> LcStatus {
    run(|| write_string(out_json, to_json(&verdict(graph_ref(graph)?, method)?)))
}

/// Runs every method and the oracle. The JSON report is stored even when the
/// methods disagree, in which case the status is `LC_STATUS_DISAGREEMENT`.
///
/// # Safety
/// `graph` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_check_all(graph: *const LcGraph, out_json: *mut *mut c_char) -> LcStatus {
    run(|| {
        let report = evaluate_all(graph_ref(graph)?).map_err(|e| (LcStatus::TooManyCircles, e.to_string()))?;
        write_string(out_json, to_json(&report))?;
        if report.is_clean() {
            Ok(())
        } else {
            Err((LcStatus::Disagreement, "methods disagree; see the report".into()))
        }
    })
}

/// The classification of the negative subgraph's components, as JSON.
///
/// # Safety
/// `graph` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_decompose_json(graph: *const LcGraph, out_json: *mut *mut c_char) -> LcStatus {
    run(|| write_string(out_json, to_json(&classify_structure(graph_ref(graph)?))))
}

/// The sign-marked line graph, as JSON.
///
/// # Safety
/// `graph` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_line_graph_json(graph: *const LcGraph, out_json: *mut *mut c_char) -> LcStatus {
    run(|| write_string(out_json, write_marked_graph(&line_graph(graph_ref(graph)?))))
}

/// The graph in canonical JSON.
///
/// # Safety
/// `graph` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_graph_to_json(graph: *const LcGraph, out_json: *mut *mut c_char) -> LcStatus {
    run(|| write_string(out_json, write_signed_graph(graph_ref(graph)?)))
}

/// The graph in Graphviz DOT, with the negative-subgraph components as
/// clusters when `annotate` is true.
///
/// # Safety
/// `graph` must be a live handle and `out_dot` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_graph_to_dot(graph: *const LcGraph, annotate: bool, out_dot: *mut *mut c_char) -> LcStatus {
    run(|| {
        let g = graph_ref(graph)?;
        let report = annotate.then(|| classify_structure(g));
        write_string(out_dot, export_dot(g, report.as_ref()))
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The message of the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// The library version as a static C string.
#[no_mangle]
pub extern "C" fn lc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
