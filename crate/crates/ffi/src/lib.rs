//! C ABI for the bchroma toolkit.
//!
//! Graphs travel as opaque handles created and destroyed here; every
//! fallible call returns a [`BchromaStatus`] and writes its payload
//! through out-pointers. Rich results (procedure runs, signatures) come
//! back as JSON strings that must be released with
//! [`bchroma_string_free`]. All functions are thread-safe as long as a
//! single handle is not freed while another call is using it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::path::Path;

use bchroma::constructive::{self, Outcome};
use bchroma::exact::{self, SearchBudget, SolveStatus};
use bchroma::generators;
use bchroma::io::{self, GraphFormat};
use bchroma::report::{Report, ReportResult};
use bchroma::{Error, Graph};

/// Opaque graph handle.
pub struct BchromaGraph {
    inner: Graph,
}

/// Result codes for every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BchromaStatus {
    Ok = 0,
    /// A pointer argument was null.
    NullPointer = 1,
    /// Arguments were structurally invalid (range, encoding, size guard).
    InvalidArgument = 2,
    /// The input file did not parse.
    ParseError = 3,
    /// The solver gave up before proving a value exact.
    Inconclusive = 4,
    /// The operation needs a regular graph.
    NotRegular = 5,
    /// The constructive procedure did not reach its goal.
    ProcedureFailed = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let cstring = CString::new(msg).unwrap_or_else(|_| CString::new("invalid message").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(cstring));
}

fn status_from_error(e: &Error) -> BchromaStatus {
    set_last_error(e.to_string());
    match e {
        Error::Parse { .. } | Error::Io(_) => BchromaStatus::ParseError,
        Error::NotRegular => BchromaStatus::NotRegular,
        _ => BchromaStatus::InvalidArgument,
    }
}

/// Message describing the most recent failure on this thread, or null.
/// The pointer stays valid until the next failing call on the thread.
#[no_mangle]
pub extern "C" fn bchroma_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from a bchroma function that documents this free call,
/// and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bchroma_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Frees a graph handle. Null is ignored.
///
/// # Safety
/// `g` must be a handle produced by this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn bchroma_graph_free(g: *mut BchromaGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

fn hand_out(graph: Graph, out: *mut *mut BchromaGraph) -> BchromaStatus {
    if out.is_null() {
        return BchromaStatus::NullPointer;
    }
    let handle = Box::new(BchromaGraph { inner: graph });
    unsafe { *out = Box::into_raw(handle) };
    BchromaStatus::Ok
}

unsafe fn graph_ref<'a>(g: *const BchromaGraph) -> Option<&'a Graph> {
    g.as_ref().map(|h| &h.inner)
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, BchromaStatus> {
    if s.is_null() {
        return Err(BchromaStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_last_error("string argument is not valid UTF-8".into());
        BchromaStatus::InvalidArgument
    })
}

/// Loads a graph from a file. `format` is "dimacs", "edgelist", or null
/// to pick by extension.
///
/// # Safety
/// `path` (and `format` when non-null) must be valid C strings; `out`
/// must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bchroma_graph_from_file(
    path: *const c_char,
    format: *const c_char,
    out: *mut *mut BchromaGraph,
) -> BchromaStatus {
    let path = match str_arg(path) {
        Ok(p) => p,
        Err(s) => return s,
    };
    let format = if format.is_null() {
        GraphFormat::from_path(Path::new(path))
    } else {
        match str_arg(format) {
            Ok("dimacs") => GraphFormat::Dimacs,
            Ok("edgelist") => GraphFormat::EdgeList,
            Ok(other) => {
                set_last_error(format!("unknown format {other:?}"));
                return BchromaStatus::InvalidArgument;
            }
            Err(s) => return s,
        }
    };
    match io::parse_graph_file(Path::new(path), format) {
        Ok(loaded) => hand_out(loaded.graph, out),
        Err(e) => status_from_error(&e),
    }
}

/// Builds one of the embedded named graphs (petersen, heawood, mcgee,
/// robertson, hoffman_singleton).
///
/// # Safety
/// `name` must be a valid C string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bchroma_graph_named(
    name: *const c_char,
    out: *mut *mut BchromaGraph,
) -> BchromaStatus {
    let name = match str_arg(name) {
        Ok(n) => n,
        Err(s) => return s,
    };
    match generators::named_graph(name) {
        Ok(g) => hand_out(g, out),
        Err(e) => status_from_error(&e),
    }
}

/// Builds a graph from an edge array `[u0, v0, u1, v1, ...]` of
/// `2 * edge_count` vertex indices.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be null
/// with `edge_count == 0`); `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bchroma_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut BchromaGraph,
) -> BchromaStatus {
    if edges.is_null() && edge_count > 0 {
        return BchromaStatus::NullPointer;
    }
    let flat = if edge_count == 0 {
        &[]
    } else {
        std::slice::from_raw_parts(edges, 2 * edge_count)
    };
    let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|c| (c[0], c[1])).collect();
    match Graph::from_edges(n, &pairs) {
        Ok(g) => hand_out(g, out),
        Err(e) => status_from_error(&e),
    }
}

/// Seeded random d-regular graph via the pairing model.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bchroma_graph_random_regular(
    n: usize,
    d: usize,
    seed: u64,
    out: *mut *mut BchromaGraph,
) -> BchromaStatus {
    match generators::random_regular(n, d, seed) {
        Ok(g) => hand_out(g, out),
        Err(e) => status_from_error(&e),
    }
}

/// Point-line incidence graph of the projective plane of prime order q.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bchroma_graph_projective(
    q: usize,
    out: *mut *mut BchromaGraph,
) -> BchromaStatus {
    match generators::projective_incidence(q) {
        Ok(g) => hand_out(g, out),
        Err(e) => status_from_error(&e),
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn bchroma_graph_vertex_count(g: *const BchromaGraph) -> usize {
    graph_ref(g).map_or(0, Graph::n)
}

/// Number of edges; 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn bchroma_graph_edge_count(g: *const BchromaGraph) -> usize {
    graph_ref(g).map_or(0, Graph::m)
}

/// Writes the degree of `v`.
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bchroma_graph_degree(
    g: *const BchromaGraph,
    v: usize,
    out: *mut usize,
) -> BchromaStatus {
    let (Some(graph), false) = (graph_ref(g), out.is_null()) else {
        return BchromaStatus::NullPointer;
    };
    match graph.degree(v) {
        Ok(d) => {
            *out = d;
            BchromaStatus::Ok
        }
        Err(e) => status_from_error(&e),
    }
}

/// Writes the common degree, or -1 when the graph is not regular.
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bchroma_graph_regular_degree(
    g: *const BchromaGraph,
    out: *mut i64,
) -> BchromaStatus {
    let (Some(graph), false) = (graph_ref(g), out.is_null()) else {
        return BchromaStatus::NullPointer;
    };
    *out = graph.is_regular().map_or(-1, |d| d as i64);
    BchromaStatus::Ok
}

/// Writes the girth, or -1 for a forest.
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bchroma_graph_girth(
    g: *const BchromaGraph,
    out: *mut i64,
) -> BchromaStatus {
    let (Some(graph), false) = (graph_ref(g), out.is_null()) else {
        return BchromaStatus::NullPointer;
    };
    *out = graph.girth().map_or(-1, |x| x as i64);
    BchromaStatus::Ok
}

/// Writes the diameter, or -1 when the graph is disconnected.
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bchroma_graph_diameter(
    g: *const BchromaGraph,
    out: *mut i64,
) -> BchromaStatus {
    let (Some(graph), false) = (graph_ref(g), out.is_null()) else {
        return BchromaStatus::NullPointer;
    };
    *out = graph.diameter().map_or(-1, |x| x as i64);
    BchromaStatus::Ok
}

fn budget(node_limit: u64, time_limit_ms: u64) -> SearchBudget {
    let mut b = SearchBudget::default();
    if node_limit > 0 {
        b.node_limit = node_limit;
    }
    if time_limit_ms > 0 {
        b.time_limit_ms = time_limit_ms;
    }
    b
}

/// Exact chromatic number. Zero limits mean the defaults.
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bchroma_chromatic_number(
    g: *const BchromaGraph,
    node_limit: u64,
    time_limit_ms: u64,
    out: *mut u64,
) -> BchromaStatus {
    let (Some(graph), false) = (graph_ref(g), out.is_null()) else {
        return BchromaStatus::NullPointer;
    };
    let r = exact::chromatic_number(graph, budget(node_limit, time_limit_ms));
    finish_exact(r.status, r.value, out)
}

/// Exact b-chromatic number. Zero limits mean the defaults.
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bchroma_b_number(
    g: *const BchromaGraph,
    node_limit: u64,
    time_limit_ms: u64,
    out: *mut u64,
) -> BchromaStatus {
    let (Some(graph), false) = (graph_ref(g), out.is_null()) else {
        return BchromaStatus::NullPointer;
    };
    let r = exact::b_number_exact(graph, budget(node_limit, time_limit_ms));
    finish_exact(r.status, r.value, out)
}

/// Exact dominant-color number f of a regular graph. Zero limits mean
/// the defaults.
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bchroma_f_number(
    g: *const BchromaGraph,
    node_limit: u64,
    time_limit_ms: u64,
    out: *mut u64,
) -> BchromaStatus {
    let (Some(graph), false) = (graph_ref(g), out.is_null()) else {
        return BchromaStatus::NullPointer;
    };
    match exact::f_number_exact(graph, budget(node_limit, time_limit_ms)) {
        Ok(r) => finish_exact(r.status, r.value, out),
        Err(e) => status_from_error(&e),
    }
}

unsafe fn finish_exact(status: SolveStatus, value: Option<usize>, out: *mut u64) -> BchromaStatus {
    match (status, value) {
        (SolveStatus::Exact, Some(v)) => {
            *out = v as u64;
            BchromaStatus::Ok
        }
        _ => {
            set_last_error("search budget exhausted before an exact value".into());
            BchromaStatus::Inconclusive
        }
    }
}

fn string_out(text: String, out: *mut *mut c_char) -> BchromaStatus {
    if out.is_null() {
        return BchromaStatus::NullPointer;
    }
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            BchromaStatus::Ok
        }
        Err(_) => {
            set_last_error("report contained an interior NUL".into());
            BchromaStatus::InvalidArgument
        }
    }
}

/// JSON report with the structural signature and theorem hypothesis
/// flags. Free with [`bchroma_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bchroma_info_json(
    g: *const BchromaGraph,
    out: *mut *mut c_char,
) -> BchromaStatus {
    let Some(graph) = graph_ref(g) else {
        return BchromaStatus::NullPointer;
    };
    let report = Report::new("info".into(), graph, ReportResult::Info, 0);
    string_out(report.to_json(), out)
}

/// Runs a constructive procedure ("thm21", "thm22", "thm23", "ux",
/// "thm31"); `center` below 0 picks the default. On success and on
/// procedure failure alike, the full JSON report lands in `out` (free
/// with [`bchroma_string_free`]); the status tells them apart.
///
/// # Safety
/// `g` must be a live handle; `procedure` a valid C string; `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bchroma_construct_json(
    g: *const BchromaGraph,
    procedure: *const c_char,
    center: i64,
    out: *mut *mut c_char,
) -> BchromaStatus {
    let Some(graph) = graph_ref(g) else {
        return BchromaStatus::NullPointer;
    };
    let procedure = match str_arg(procedure) {
        Ok(p) => p,
        Err(s) => return s,
    };
    let center = (center >= 0).then_some(center as usize);
    let report = match procedure {
        "thm21" => constructive::theorem_2_1_procedure(graph),
        "thm22" => constructive::theorem_2_2_procedure(graph, center.unwrap_or(0)),
        "thm23" => constructive::theorem_2_3_procedure(graph),
        "thm31" => constructive::theorem_3_1_procedure(graph),
        "ux" => {
            let x = center.unwrap_or(0);
            let u_set = graph
                .is_regular()
                .filter(|_| x < graph.n())
                .map(|d| graph.neighbors(x).iter().copied().take(d / 2 + 1).collect())
                .unwrap_or_default();
            constructive::ux_coloring(graph, x, &u_set)
        }
        other => {
            set_last_error(format!("unknown procedure {other:?}"));
            return BchromaStatus::InvalidArgument;
        }
    };
    let outcome = report.outcome;
    let full = Report::new(
        format!("construct --procedure {procedure}"),
        graph,
        ReportResult::Procedure(report),
        0,
    );
    let status = string_out(full.to_json(), out);
    if status != BchromaStatus::Ok {
        return status;
    }
    match outcome {
        Outcome::Success => BchromaStatus::Ok,
        _ => {
            set_last_error(format!("procedure ended with outcome {outcome:?}"));
            BchromaStatus::ProcedureFailed
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_enum_is_stable() {
        assert_eq!(BchromaStatus::Ok as i32, 0);
        assert_eq!(BchromaStatus::ProcedureFailed as i32, 6);
    }
}
