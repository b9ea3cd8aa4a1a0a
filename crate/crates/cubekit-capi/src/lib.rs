//! C ABI over the toolkit: opaque graph handles, integer status codes and
//! JSON report strings. Every entry point catches panics and never unwinds
//! across the boundary; failure details land in a thread-local slot that
//! `cubekit_last_error` exposes until the next call on the same thread.
//!
//! The committed header `include/cubekit.h` is generated from this file;
//! a test regenerates it and fails when the two drift apart.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use cubekit::classify::{classify_with, ExclusionReason, Outcome};
use cubekit::families::FamilySpec;
use cubekit::graph::{girth, Graph};
use cubekit::io::parse_graph6;
use cubekit::report::{classes_payload, classify_payload, recognize_payload, Payload, Report};
use cubekit::theta::is_partial_cube;

/// Opaque graph handle. Create with a constructor, release with
/// `cubekit_graph_free`.
pub struct CubekitGraph {
    graph: Graph,
}

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CubekitStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotPartialCube = 4,
    BoundExceeded = 5,
    Panic = 6,
}

/// Shape of a classify verdict.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CubekitOutcome {
    Hypercube = 0,
    DoubledOdd = 1,
    EvenCycle = 2,
    Excluded = 3,
}

/// Why a graph fell outside the three families; `None` accompanies a
/// positive outcome.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CubekitExclusion {
    None = 0,
    NotPartialCube = 1,
    TrivialK1K2 = 2,
    NotRegular = 3,
    NoCycles = 4,
    MixedCycleLengths = 5,
}

/// Classification verdict. `parameter` is k for HYPERCUBE and DOUBLED_ODD
/// and n for EVEN_CYCLE (the cycle has 2n vertices); 0 when excluded.
/// Measurements that do not apply are -1.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct CubekitClassification {
    pub outcome: CubekitOutcome,
    pub exclusion: CubekitExclusion,
    pub parameter: u32,
    pub convex_cycle_length: i64,
    pub degree: i64,
    pub isometric_dimension: i64,
    pub certified: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = Some(CString::new(message).expect("nul stripped"));
    });
}

fn clear_error() {
    LAST_ERROR.with(|slot| slot.borrow_mut().take());
}

fn guarded(f: impl FnOnce() -> CubekitStatus) -> CubekitStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic in library call".to_string());
            set_error(message);
            CubekitStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char, status: &mut CubekitStatus) -> Option<&'a str> {
    if ptr.is_null() {
        set_error("null string argument");
        *status = CubekitStatus::NullArgument;
        return None;
    }
    match CStr::from_ptr(ptr).to_str() {
        Ok(s) => Some(s),
        Err(_) => {
            set_error("string argument is not UTF-8");
            *status = CubekitStatus::InvalidUtf8;
            None
        }
    }
}

unsafe fn hand_out(out: *mut *mut CubekitGraph, graph: Graph) -> CubekitStatus {
    if out.is_null() {
        set_error("null output argument");
        return CubekitStatus::NullArgument;
    }
    *out = Box::into_raw(Box::new(CubekitGraph { graph }));
    CubekitStatus::Ok
}

/// Builds a graph from `edge_count` endpoint pairs laid out as
/// u0,v0,u1,v1,... over `vertex_count` vertices.
#[no_mangle]
pub unsafe extern "C" fn cubekit_graph_from_edges(
    endpoints: *const u32,
    edge_count: usize,
    vertex_count: u32,
    out: *mut *mut CubekitGraph,
) -> CubekitStatus {
    guarded(|| {
        if endpoints.is_null() && edge_count > 0 {
            set_error("null endpoint array");
            return CubekitStatus::NullArgument;
        }
        let flat = std::slice::from_raw_parts(endpoints, 2 * edge_count);
        let pairs: Vec<(usize, usize)> = flat
            .chunks_exact(2)
            .map(|c| (c[0] as usize, c[1] as usize))
            .collect();
        match Graph::from_edge_list(&pairs, Some(vertex_count as usize)) {
            Ok(g) => hand_out(out, g),
            Err(e) => {
                set_error(e.to_string());
                CubekitStatus::Parse
            }
        }
    })
}

/// Parses one graph6 line (optionally with the `>>graph6<<` header).
#[no_mangle]
pub unsafe extern "C" fn cubekit_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut CubekitGraph,
) -> CubekitStatus {
    guarded(|| {
        let mut status = CubekitStatus::Ok;
        let Some(text) = read_str(text, &mut status) else {
            return status;
        };
        match parse_graph6(text) {
            Ok(g) => hand_out(out, g),
            Err(e) => {
                set_error(e.to_string());
                CubekitStatus::Parse
            }
        }
    })
}

/// Builds a family graph from a spec such as "Q:4", "DO:3", "C:10",
/// "GRID:3x4" or "PROD(Q:2,C:6)".
#[no_mangle]
pub unsafe extern "C" fn cubekit_graph_from_family(
    spec: *const c_char,
    out: *mut *mut CubekitGraph,
) -> CubekitStatus {
    guarded(|| {
        let mut status = CubekitStatus::Ok;
        let Some(spec) = read_str(spec, &mut status) else {
            return status;
        };
        let built = spec
            .parse::<FamilySpec>()
            .map_err(|e| e.to_string())
            .and_then(|f| f.build().map_err(|e| e.to_string()));
        match built {
            Ok(g) => hand_out(out, g),
            Err(e) => {
                set_error(e);
                CubekitStatus::Parse
            }
        }
    })
}

/// Releases a graph handle. Passing null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn cubekit_graph_free(graph: *mut CubekitGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn cubekit_vertex_count(graph: *const CubekitGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.vertex_count())
}

/// Number of edges; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn cubekit_edge_count(graph: *const CubekitGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.edge_count())
}

/// Length of a shortest cycle, or -1 when the graph is acyclic or null.
#[no_mangle]
pub unsafe extern "C" fn cubekit_girth(graph: *const CubekitGraph) -> i64 {
    let result = catch_unwind(AssertUnwindSafe(|| {
        graph
            .as_ref()
            .and_then(|g| girth(&g.graph))
            .map_or(-1, |g| g as i64)
    }));
    result.unwrap_or(-1)
}

/// Writes whether the graph is a partial cube into `out`.
#[no_mangle]
pub unsafe extern "C" fn cubekit_is_partial_cube(
    graph: *const CubekitGraph,
    out: *mut bool,
) -> CubekitStatus {
    guarded(|| {
        let (Some(g), false) = (graph.as_ref(), out.is_null()) else {
            set_error("null argument");
            return CubekitStatus::NullArgument;
        };
        *out = is_partial_cube(&g.graph).is_partial_cube();
        CubekitStatus::Ok
    })
}

/// Writes the number of Djokovic-Winkler classes into `out`; fails with
/// NOT_PARTIAL_CUBE (see `cubekit_last_error`) otherwise.
#[no_mangle]
pub unsafe extern "C" fn cubekit_isometric_dimension(
    graph: *const CubekitGraph,
    out: *mut usize,
) -> CubekitStatus {
    guarded(|| {
        let (Some(g), false) = (graph.as_ref(), out.is_null()) else {
            set_error("null argument");
            return CubekitStatus::NullArgument;
        };
        match is_partial_cube(&g.graph).certificate() {
            Some(cert) => {
                *out = cert.partition.class_count();
                CubekitStatus::Ok
            }
            None => {
                set_error("not a partial cube");
                CubekitStatus::NotPartialCube
            }
        }
    })
}

fn classification_struct(
    c: &cubekit::classify::Classification,
    certified: bool,
) -> CubekitClassification {
    let (outcome, exclusion, parameter) = match &c.outcome {
        Outcome::Hypercube { k } => (CubekitOutcome::Hypercube, CubekitExclusion::None, *k as u32),
        Outcome::DoubledOdd { k } => (CubekitOutcome::DoubledOdd, CubekitExclusion::None, *k as u32),
        Outcome::EvenCycle { n } => (CubekitOutcome::EvenCycle, CubekitExclusion::None, *n as u32),
        Outcome::Excluded(reason) => {
            let exclusion = match reason {
                ExclusionReason::NotPartialCube(_) => CubekitExclusion::NotPartialCube,
                ExclusionReason::TrivialK1K2 => CubekitExclusion::TrivialK1K2,
                ExclusionReason::NotRegular { .. } => CubekitExclusion::NotRegular,
                ExclusionReason::NoCycles => CubekitExclusion::NoCycles,
                ExclusionReason::MixedCycleLengths { .. } => CubekitExclusion::MixedCycleLengths,
            };
            (CubekitOutcome::Excluded, exclusion, 0)
        }
    };
    let signed = |v: Option<usize>| v.map_or(-1, |x| x as i64);
    CubekitClassification {
        outcome,
        exclusion,
        parameter,
        convex_cycle_length: signed(c.convex_cycle_length),
        degree: signed(c.degree),
        isometric_dimension: signed(c.isometric_dimension),
        certified,
    }
}

/// Classifies the graph by its uniform convex cycle length. With `certify`
/// set, DOUBLED_ODD and EVEN_CYCLE verdicts carry an isomorphism check and
/// graphs above the size bound fail with BOUND_EXCEEDED.
#[no_mangle]
pub unsafe extern "C" fn cubekit_classify(
    graph: *const CubekitGraph,
    certify: bool,
    out: *mut CubekitClassification,
) -> CubekitStatus {
    guarded(|| {
        let (Some(g), false) = (graph.as_ref(), out.is_null()) else {
            set_error("null argument");
            return CubekitStatus::NullArgument;
        };
        match classify_with(&g.graph, certify) {
            Ok(c) => {
                let certified = c.isomorphism.is_some();
                *out = classification_struct(&c, certified);
                CubekitStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                CubekitStatus::BoundExceeded
            }
        }
    })
}

unsafe fn hand_out_json(out: *mut *mut c_char, report: Report) -> CubekitStatus {
    if out.is_null() {
        set_error("null output argument");
        return CubekitStatus::NullArgument;
    }
    let json = CString::new(report.to_json()).expect("JSON has no NUL");
    *out = json.into_raw();
    CubekitStatus::Ok
}

/// Recognition report as a JSON string; free with `cubekit_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cubekit_recognize_json(
    graph: *const CubekitGraph,
    out: *mut *mut c_char,
) -> CubekitStatus {
    guarded(|| {
        let Some(g) = graph.as_ref() else {
            set_error("null argument");
            return CubekitStatus::NullArgument;
        };
        let check = is_partial_cube(&g.graph);
        let report = Report::new(
            "recognize",
            "ffi",
            Payload::Recognize(recognize_payload(&g.graph, &check)),
        );
        hand_out_json(out, report)
    })
}

/// Classification report as a JSON string; free with `cubekit_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cubekit_classify_json(
    graph: *const CubekitGraph,
    out: *mut *mut c_char,
) -> CubekitStatus {
    guarded(|| {
        let Some(g) = graph.as_ref() else {
            set_error("null argument");
            return CubekitStatus::NullArgument;
        };
        let classification = classify_with(&g.graph, false).expect("certification disabled");
        let report = Report::new(
            "classify",
            "ffi",
            Payload::Classify(classify_payload(&g.graph, &classification)),
        );
        hand_out_json(out, report)
    })
}

/// Class-chain report (median, almost-median, tiled, semi-median) as a
/// JSON string; free with `cubekit_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cubekit_classes_json(
    graph: *const CubekitGraph,
    out: *mut *mut c_char,
) -> CubekitStatus {
    guarded(|| {
        let Some(g) = graph.as_ref() else {
            set_error("null argument");
            return CubekitStatus::NullArgument;
        };
        let report = cubekit::classes::class_report(&g.graph);
        let report = Report::new(
            "classes",
            "ffi",
            Payload::Classes(classes_payload(&g.graph, &report)),
        );
        hand_out_json(out, report)
    })
}

/// Releases a string returned by a `_json` function. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn cubekit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub unsafe extern "C" fn cubekit_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}
