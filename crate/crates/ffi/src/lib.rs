//! C ABI for `palette-core`.
//!
//! Graphs and colorings cross the boundary as opaque handles owned by the
//! caller and released with the matching `*_free` function. Every fallible
//! call returns a [`PaletteStatus`]; on failure [`palette_last_error`] gives a
//! message for the calling thread. Strings returned through out-pointers are
//! released with [`palette_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use palette_core::constructions::{cubic_matching_reduction, CubicMode};
use palette_core::graph::{build_generator, cartesian_product, GeneratorKind};
use palette_core::io::{to_json, CertificateJson, ColoringJson, GraphJson, PalettesJson};
use palette_core::oracle::palette_index_exact;
use palette_core::torus::torus_three_palette_coloring;
use palette_core::verify::{run_suite, Status, Suite, SuiteParams};
use palette_core::{Budget, EdgeColoring, Error, Graph};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PaletteStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    PreconditionFailed = 3,
    BudgetExceeded = 4,
    Improper = 5,
    /// A verification suite ran and at least one case failed.
    CheckFailed = 6,
    Panic = 7,
}

/// Opaque graph handle.
pub struct PaletteGraph(Graph);

/// Opaque edge-coloring handle.
pub struct PaletteColoring(EdgeColoring);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap_or_default());
}

fn status_of(e: &Error) -> PaletteStatus {
    match e {
        Error::BudgetExceeded(_) => PaletteStatus::BudgetExceeded,
        Error::Improper { .. } => PaletteStatus::Improper,
        Error::Precondition(_) | Error::NotPerfect | Error::Disconnected | Error::ColorRange(_) => {
            PaletteStatus::PreconditionFailed
        }
        _ => PaletteStatus::InvalidArgument,
    }
}

/// Runs `body`, converting errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), PaletteStatusError>) -> PaletteStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            PaletteStatus::Ok
        }
        Ok(Err(PaletteStatusError(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PaletteStatus::Panic
        }
    }
}

struct PaletteStatusError(PaletteStatus, String);

impl From<Error> for PaletteStatusError {
    fn from(e: Error) -> Self {
        PaletteStatusError(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> PaletteStatusError {
    PaletteStatusError(PaletteStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, PaletteStatusError> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| PaletteStatusError(PaletteStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), PaletteStatusError> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), PaletteStatusError> {
    let c = CString::new(s).map_err(|_| PaletteStatusError(PaletteStatus::InvalidArgument, "interior NUL".into()))?;
    write_out(out, c.into_raw(), "out")
}

fn budget(nodes: u64) -> Budget {
    if nodes == 0 {
        Budget::default()
    } else {
        Budget::nodes(nodes)
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn palette_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
///
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn palette_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a generator graph from a spec such as `"cycle:5"` or `"petersen"`.
///
/// # Safety
///
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn palette_graph_generate(spec: *const c_char, out: *mut *mut PaletteGraph) -> PaletteStatus {
    guard(|| {
        let kind: GeneratorKind = read_str(spec, "spec")?.parse()?;
        let g = build_generator(kind)?;
        write_out(out, Box::into_raw(Box::new(PaletteGraph(g))), "out")
    })
}

/// Parses a graph from its JSON document.
///
/// # Safety
///
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn palette_graph_from_json(json: *const c_char, out: *mut *mut PaletteGraph) -> PaletteStatus {
    guard(|| {
        let doc: GraphJson = serde_json::from_str(read_str(json, "json")?).map_err(Error::from)?;
        let g = Graph::try_from(&doc)?;
        write_out(out, Box::into_raw(Box::new(PaletteGraph(g))), "out")
    })
}

/// The Cartesian product `a □ b`.
///
/// # Safety
///
/// `a` and `b` must be live graph handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn palette_graph_product(
    a: *const PaletteGraph,
    b: *const PaletteGraph,
    out: *mut *mut PaletteGraph,
) -> PaletteStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("a"))?;
        let b = b.as_ref().ok_or_else(|| null("b"))?;
        let g = cartesian_product(&a.0, &b.0)?;
        write_out(out, Box::into_raw(Box::new(PaletteGraph(g))), "out")
    })
}

/// Vertex and edge counts.
///
/// # Safety
///
/// `g` must be a live graph handle; the out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn palette_graph_size(
    g: *const PaletteGraph,
    vertices: *mut usize,
    edges: *mut usize,
) -> PaletteStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graph"))?;
        write_out(vertices, g.0.vertex_count(), "vertices")?;
        write_out(edges, g.0.edge_count(), "edges")
    })
}

/// The graph as a JSON document.
///
/// # Safety
///
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn palette_graph_to_json(g: *const PaletteGraph, out: *mut *mut c_char) -> PaletteStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graph"))?;
        write_string(out, to_json(&GraphJson::from(&g.0))?)
    })
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
///
/// `g` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn palette_graph_free(g: *mut PaletteGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// The six-color, three-palette coloring of `C_s □ C_t` for odd `s >= t >= 3`.
///
/// # Safety
///
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn palette_torus_coloring(s: usize, t: usize, out: *mut *mut PaletteColoring) -> PaletteStatus {
    guard(|| {
        let f = torus_three_palette_coloring(s, t)?;
        write_out(out, Box::into_raw(Box::new(PaletteColoring(f))), "out")
    })
}

/// The matching reduction coloring of `C_s □ G` (or `P_s □ G` when
/// `path_mode` is nonzero) for class-2 cubic `G`. `budget_nodes == 0` uses the
/// default budget.
///
/// # Safety
///
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn palette_cubic_reduction(
    g: *const PaletteGraph,
    s: usize,
    path_mode: i32,
    budget_nodes: u64,
    out: *mut *mut PaletteColoring,
) -> PaletteStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graph"))?;
        let mode = if path_mode != 0 {
            CubicMode::Path
        } else {
            CubicMode::Cycle
        };
        let f = cubic_matching_reduction(s, &g.0, None, mode, &budget(budget_nodes))?;
        write_out(out, Box::into_raw(Box::new(PaletteColoring(f))), "out")
    })
}

/// Number of distinct vertex palettes of a proper coloring.
///
/// # Safety
///
/// `f` must be a live coloring handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn palette_coloring_palette_count(f: *const PaletteColoring, out: *mut usize) -> PaletteStatus {
    guard(|| {
        let f = f.as_ref().ok_or_else(|| null("coloring"))?;
        write_out(out, f.0.palette_count()?, "out")
    })
}

/// Writes 1 if the coloring is proper, else 0.
///
/// # Safety
///
/// `f` must be a live coloring handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn palette_coloring_is_proper(f: *const PaletteColoring, out: *mut i32) -> PaletteStatus {
    guard(|| {
        let f = f.as_ref().ok_or_else(|| null("coloring"))?;
        write_out(out, f.0.is_proper() as i32, "out")
    })
}

/// The coloring as a JSON document.
///
/// # Safety
///
/// `f` must be a live coloring handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn palette_coloring_to_json(f: *const PaletteColoring, out: *mut *mut c_char) -> PaletteStatus {
    guard(|| {
        let f = f.as_ref().ok_or_else(|| null("coloring"))?;
        write_string(out, to_json(&ColoringJson::from(&f.0))?)
    })
}

/// The palette report of a proper coloring as JSON.
///
/// # Safety
///
/// `f` must be a live coloring handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn palette_coloring_palettes_json(
    f: *const PaletteColoring,
    out: *mut *mut c_char,
) -> PaletteStatus {
    guard(|| {
        let f = f.as_ref().ok_or_else(|| null("coloring"))?;
        write_string(out, to_json(&PalettesJson::of(&f.0)?)?)
    })
}

/// Releases a coloring handle. Null is ignored.
///
/// # Safety
///
/// `f` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn palette_coloring_free(f: *mut PaletteColoring) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Palette index certificate. `max_palettes == 0` uses the default ceiling;
/// `budget_nodes == 0` the default budget. `exact` receives 0 when the
/// bounds did not meet, `upper` receives 0 when no witness was found.
///
/// # Safety
///
/// `g` must be a live graph handle; the out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn palette_oracle_exact(
    g: *const PaletteGraph,
    max_palettes: usize,
    budget_nodes: u64,
    lower: *mut usize,
    upper: *mut usize,
    exact: *mut usize,
) -> PaletteStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graph"))?;
        let max = (max_palettes != 0).then_some(max_palettes);
        let cert = palette_index_exact(&g.0, max, &budget(budget_nodes))?;
        write_out(lower, cert.lower, "lower")?;
        write_out(upper, cert.upper_value().unwrap_or(0), "upper")?;
        write_out(exact, cert.exact.unwrap_or(0), "exact")
    })
}

/// Certificate JSON for the palette index.
///
/// # Safety
///
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn palette_oracle_json(
    g: *const PaletteGraph,
    max_palettes: usize,
    budget_nodes: u64,
    out: *mut *mut c_char,
) -> PaletteStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graph"))?;
        let max = (max_palettes != 0).then_some(max_palettes);
        let cert = palette_index_exact(&g.0, max, &budget(budget_nodes))?;
        write_string(out, to_json(&CertificateJson::from(&cert))?)
    })
}

/// Runs a verification suite by name with default parameters and writes the
/// JSON report. Returns `CheckFailed` if a case failed and `BudgetExceeded`
/// if a case was indeterminate; the report is written in both cases.
///
/// # Safety
///
/// `suite` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn palette_verify_suite(suite: *const c_char, out: *mut *mut c_char) -> PaletteStatus {
    guard(|| {
        let suite: Suite = read_str(suite, "suite")?.parse()?;
        let report = run_suite(suite, &SuiteParams::default());
        write_string(out, to_json(&report)?)?;
        match report.status {
            Status::Pass => Ok(()),
            Status::Fail => Err(PaletteStatusError(
                PaletteStatus::CheckFailed,
                format!("{suite} failed"),
            )),
            Status::Indeterminate => Err(PaletteStatusError(
                PaletteStatus::BudgetExceeded,
                format!("{suite} indeterminate"),
            )),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn null_spec_reports_error() {
        let mut g = ptr::null_mut();
        let st = unsafe { palette_graph_generate(ptr::null(), &mut g) };
        assert_eq!(st, PaletteStatus::NullPointer);
        let msg = unsafe { CStr::from_ptr(palette_last_error()) };
        assert_eq!(msg.to_str().unwrap(), "spec is null");
    }
}
