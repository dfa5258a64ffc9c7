//! C interface to abmod.
//!
//! Graphs and module families are opaque handles owned by the caller and
//! released with the matching `_free` function. Every fallible call returns an
//! `AbmodStatus`; on failure `abmod_last_error` describes the problem until
//! the next failing call on the same thread. Vertex sets cross the boundary as
//! arrays of `uint32_t` ids, written into caller buffers: when a buffer is too
//! small the call returns `ABMOD_STATUS_BUFFER_TOO_SMALL` and stores the
//! required length.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use abmod::decomposition::{decomposition_tree, Strategy};
use abmod::enumeration::{is_prime, minimal_nontrivial_modules};
use abmod::io::output::tree_json;
use abmod::io::{parse_graph, Labels};
use abmod::{closure_refined, is_ab_module, AbParams, Graph, VertexSet};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbmodStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    BufferTooSmall = 4,
    Panic = 5,
}

/// A graph with its vertex labels.
pub struct AbmodGraph {
    graph: Graph,
    labels: Labels,
}

/// A list of vertex sets.
pub struct AbmodFamily {
    members: Vec<VertexSet>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn fail(status: AbmodStatus, msg: impl Into<String>) -> AbmodStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning a panic into `ABMOD_STATUS_PANIC`.
fn guard(f: impl FnOnce() -> AbmodStatus) -> AbmodStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|payload| {
        let msg = payload
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| payload.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "unknown panic".into());
        fail(AbmodStatus::Panic, format!("internal error: {msg}"))
    })
}

/// The message for the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn abmod_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

unsafe fn slice<'a, T>(data: *const T, len: usize) -> Option<&'a [T]> {
    if len == 0 {
        Some(&[])
    } else if data.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(data, len))
    }
}

fn params(g: &Graph, alpha: u32, beta: u32) -> Result<AbParams, AbmodStatus> {
    let p = AbParams::new(alpha as usize, beta as usize);
    p.check_for(g.n()).map_err(|e| fail(AbmodStatus::InvalidArgument, e.to_string()))?;
    Ok(p)
}

unsafe fn vertex_set(g: &Graph, ids: *const u32, len: usize) -> Result<VertexSet, AbmodStatus> {
    let ids = slice(ids, len).ok_or_else(|| fail(AbmodStatus::NullPointer, "ids is NULL"))?;
    VertexSet::try_from_ids(g.n(), ids.iter().map(|&v| v as usize))
        .map_err(|e| fail(AbmodStatus::InvalidArgument, e.to_string()))
}

unsafe fn write_set(s: &VertexSet, out: *mut u32, capacity: usize, out_len: *mut usize) -> AbmodStatus {
    if out_len.is_null() {
        return fail(AbmodStatus::NullPointer, "out_len is NULL");
    }
    *out_len = s.len();
    if s.len() > capacity {
        return fail(AbmodStatus::BufferTooSmall, format!("{} ids need a larger buffer than {capacity}", s.len()));
    }
    if s.is_empty() {
        return AbmodStatus::Ok;
    }
    if out.is_null() {
        return fail(AbmodStatus::NullPointer, "out is NULL");
    }
    for (i, v) in s.iter().enumerate() {
        *out.add(i) = v as u32;
    }
    AbmodStatus::Ok
}

macro_rules! deref {
    ($ptr:expr, $name:literal) => {
        match $ptr.as_ref() {
            Some(r) => r,
            None => return fail(AbmodStatus::NullPointer, concat!($name, " is NULL")),
        }
    };
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Builds a graph on `n` vertices from `m` edges stored as `2m` ids.
///
/// # Safety
/// `edges` must point to `2 * m` readable ids (or be NULL when `m == 0`) and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abmod_graph_new(n: usize, edges: *const u32, m: usize, out: *mut *mut AbmodGraph) -> AbmodStatus {
    guard(|| {
        if out.is_null() {
            return fail(AbmodStatus::NullPointer, "out is NULL");
        }
        let Some(flat) = slice(edges, 2 * m) else {
            return fail(AbmodStatus::NullPointer, "edges is NULL");
        };
        let pairs = flat.chunks_exact(2).map(|e| (e[0] as usize, e[1] as usize));
        match Graph::new(n, pairs) {
            Ok(graph) => {
                *out = Box::into_raw(Box::new(AbmodGraph { graph, labels: Labels::numeric(n) }));
                AbmodStatus::Ok
            }
            Err(e) => fail(AbmodStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Parses a NUL-terminated `.g` document.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn abmod_graph_parse(text: *const c_char, out: *mut *mut AbmodGraph) -> AbmodStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(AbmodStatus::NullPointer, "text or out is NULL");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(AbmodStatus::ParseError, "document is not UTF-8");
        };
        match parse_graph(text) {
            Ok(doc) => {
                *out = Box::into_raw(Box::new(AbmodGraph { graph: doc.graph, labels: doc.labels }));
                AbmodStatus::Ok
            }
            Err(e) => fail(AbmodStatus::ParseError, e.to_string()),
        }
    })
}

/// # Safety
/// `g` must come from this library and not be used afterwards. NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn abmod_graph_free(g: *mut AbmodGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn abmod_graph_vertex_count(g: *const AbmodGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.n())
}

/// # Safety
/// `g` must be a live handle, `ids` must hold `len` ids and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn abmod_is_module(
    g: *const AbmodGraph,
    ids: *const u32,
    len: usize,
    alpha: u32,
    beta: u32,
    out: *mut bool,
) -> AbmodStatus {
    guard(|| {
        let g = deref!(g, "graph");
        let Some(out) = out.as_mut() else {
            return fail(AbmodStatus::NullPointer, "out is NULL");
        };
        let p = tri!(params(&g.graph, alpha, beta));
        let set = tri!(vertex_set(&g.graph, ids, len));
        *out = is_ab_module(&g.graph, &set, p).expect("set checked against the graph");
        AbmodStatus::Ok
    })
}

/// The smallest module containing the given set.
///
/// # Safety
/// `g` must be a live handle, `ids` must hold `len` ids, `out` must have room
/// for `capacity` ids and `out_len` be writable.
#[no_mangle]
pub unsafe extern "C" fn abmod_closure(
    g: *const AbmodGraph,
    ids: *const u32,
    len: usize,
    alpha: u32,
    beta: u32,
    out: *mut u32,
    capacity: usize,
    out_len: *mut usize,
) -> AbmodStatus {
    guard(|| {
        let g = deref!(g, "graph");
        let p = tri!(params(&g.graph, alpha, beta));
        let set = tri!(vertex_set(&g.graph, ids, len));
        match closure_refined(&g.graph, &set, p) {
            Ok(trace) => write_set(&trace.result, out, capacity, out_len),
            Err(e) => fail(AbmodStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Inclusion-minimal non-trivial modules.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn abmod_minimal_modules(
    g: *const AbmodGraph,
    alpha: u32,
    beta: u32,
    out: *mut *mut AbmodFamily,
) -> AbmodStatus {
    guard(|| {
        let g = deref!(g, "graph");
        if out.is_null() {
            return fail(AbmodStatus::NullPointer, "out is NULL");
        }
        let p = tri!(params(&g.graph, alpha, beta));
        match minimal_nontrivial_modules(&g.graph, p) {
            Ok(fam) => {
                *out = Box::into_raw(Box::new(AbmodFamily { members: fam.members }));
                AbmodStatus::Ok
            }
            Err(e) => fail(AbmodStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Number of members, or 0 for NULL.
///
/// # Safety
/// `f` must be NULL or a live family handle.
#[no_mangle]
pub unsafe extern "C" fn abmod_family_len(f: *const AbmodFamily) -> usize {
    f.as_ref().map_or(0, |f| f.members.len())
}

/// Copies member `index` into `out`.
///
/// # Safety
/// `f` must be a live handle, `out` must have room for `capacity` ids and
/// `out_len` be writable.
#[no_mangle]
pub unsafe extern "C" fn abmod_family_get(
    f: *const AbmodFamily,
    index: usize,
    out: *mut u32,
    capacity: usize,
    out_len: *mut usize,
) -> AbmodStatus {
    guard(|| {
        let f = deref!(f, "family");
        match f.members.get(index) {
            Some(s) => write_set(s, out, capacity, out_len),
            None => fail(AbmodStatus::InvalidArgument, format!("index {index} out of {}", f.members.len())),
        }
    })
}

/// # Safety
/// `f` must come from this library and not be used afterwards. NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn abmod_family_free(f: *mut AbmodFamily) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Whether the graph has only trivial modules. Small (degenerate) graphs count
/// as prime.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn abmod_is_prime(g: *const AbmodGraph, alpha: u32, beta: u32, out: *mut bool) -> AbmodStatus {
    guard(|| {
        let g = deref!(g, "graph");
        let Some(out) = out.as_mut() else {
            return fail(AbmodStatus::NullPointer, "out is NULL");
        };
        let p = tri!(params(&g.graph, alpha, beta));
        *out = is_prime(&g.graph, p).is_prime();
        AbmodStatus::Ok
    })
}

/// The decomposition tree as a JSON string, freed with `abmod_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn abmod_tree_json(g: *const AbmodGraph, alpha: u32, beta: u32, out: *mut *mut c_char) -> AbmodStatus {
    guard(|| {
        let g = deref!(g, "graph");
        if out.is_null() {
            return fail(AbmodStatus::NullPointer, "out is NULL");
        }
        let p = tri!(params(&g.graph, alpha, beta));
        match decomposition_tree(&g.graph, p, Strategy::Exact) {
            Ok(tree) => {
                let text = tree_json(&g.labels, &tree).to_string();
                *out = CString::new(text).expect("JSON has no NUL").into_raw();
                AbmodStatus::Ok
            }
            Err(e) => fail(AbmodStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards. NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn abmod_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
