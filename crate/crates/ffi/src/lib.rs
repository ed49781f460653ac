//! C ABI over the `idom` library.
//!
//! Graphs and solutions are opaque heap handles released with their `_free`
//! function. Every fallible call returns an [`IdomStatus`]; on failure a
//! description is available from [`idom_last_error`] on the same thread.
//! Panics never cross the boundary; they surface as
//! [`IdomStatus::Internal`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, size_t};

use idom::{
    brute_force_solve, gen_cycle, gen_dhk, is_ids, parse_digraph, period, solve_auto, solve_bipartite, solve_dag,
    solve_even_period, solve_exact, solve_strong_by_layers, write_arc_list, DhkSpec, DhkVariant, Digraph, Error,
    RuleSource, SolveOutcome, SolverConfig, VertexSet, BRUTE_DEFAULT_CAP,
};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdomStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    /// The graph does not satisfy the chosen method's precondition.
    Precondition = 5,
    /// Size guard or work budget exceeded.
    ResourceLimit = 6,
    Construction = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdomMethod {
    Auto = 0,
    Dag = 1,
    Even = 2,
    Bipartite = 3,
    Layers = 4,
    Exact = 5,
    Brute = 6,
}

/// Opaque directed graph.
pub struct IdomGraph(Digraph);

/// Opaque solver outcome.
pub struct IdomSolution {
    outcome: SolveOutcome,
    vertices: Vec<size_t>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

struct Failure(IdomStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e.root() {
            _ if matches!(e, Error::AtLine { .. }) => IdomStatus::Parse,
            Error::Parse { .. } | Error::SelfLoop { .. } => IdomStatus::Parse,
            Error::SizeGuard { .. } | Error::BudgetExceeded { .. } => IdomStatus::ResourceLimit,
            Error::NotStronglyConnected
            | Error::NoCycle
            | Error::NotAcyclic
            | Error::OddPeriod(_)
            | Error::NotBipartite => IdomStatus::Precondition,
            Error::Construction(_) => IdomStatus::Construction,
            _ => IdomStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(IdomStatus::NullPointer, format!("`{what}` is NULL"))
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> IdomStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => IdomStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(panic) => {
            let message = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_last_error(format!("internal error: {message}"));
            IdomStatus::Internal
        }
    }
}

unsafe fn graph_ref<'a>(graph: *const IdomGraph) -> Result<&'a Digraph, Failure> {
    graph.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn emit_graph(graph: Digraph, out: *mut *mut IdomGraph) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(IdomGraph(graph)));
    Ok(())
}

/// Message for the most recent failure on this thread, or NULL. Valid until
/// the next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn idom_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses an arc list (`n m` header, then `m` lines `u v`).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn idom_graph_parse(text: *const c_char, out: *mut *mut IdomGraph) -> IdomStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(IdomStatus::InvalidUtf8, e.to_string()))?;
        emit_graph(parse_digraph(text)?.graph, out)
    })
}

/// Builds a graph on `n` vertices from `m` arcs `tails[i] -> heads[i]`.
/// Duplicate arcs are merged.
///
/// # Safety
/// `tails` and `heads` must each point to `m` readable values (either may
/// be NULL when `m == 0`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idom_graph_from_arcs(
    n: size_t,
    tails: *const size_t,
    heads: *const size_t,
    m: size_t,
    out: *mut *mut IdomGraph,
) -> IdomStatus {
    guard(|| {
        let (tails, heads) = if m == 0 {
            (&[][..], &[][..])
        } else {
            if tails.is_null() || heads.is_null() {
                return Err(null("tails/heads"));
            }
            (std::slice::from_raw_parts(tails, m), std::slice::from_raw_parts(heads, m))
        };
        let graph = Digraph::from_arcs(n, tails.iter().copied().zip(heads.iter().copied()))?;
        emit_graph(graph, out)
    })
}

/// Directed cycle on `n >= 2` vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idom_gen_cycle(n: size_t, out: *mut *mut IdomGraph) -> IdomStatus {
    guard(|| emit_graph(gen_cycle(n)?, out))
}

/// The layered family with period `h` (odd, >= 3) over a `k`-set.
/// `with_ids` selects the variant that has an IDS; `figure_rules` selects
/// the alternative first arc rule.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn idom_gen_dhk(
    h: size_t,
    k: size_t,
    with_ids: bool,
    figure_rules: bool,
    out: *mut *mut IdomGraph,
) -> IdomStatus {
    guard(|| {
        let variant = if with_ids { DhkVariant::WithIds } else { DhkVariant::IdsFree };
        let rules = if figure_rules { RuleSource::Figure } else { RuleSource::Text };
        emit_graph(gen_dhk(&DhkSpec::new(h, k, variant, rules)?)?.graph, out)
    })
}

/// # Safety
/// `graph` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn idom_graph_free(graph: *mut IdomGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Zero for NULL.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn idom_graph_vertex_count(graph: *const IdomGraph) -> size_t {
    graph.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Zero for NULL.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn idom_graph_arc_count(graph: *const IdomGraph) -> size_t {
    graph.as_ref().map_or(0, |g| g.0.arc_count())
}

/// gcd of cycle lengths; 0 for acyclic graphs.
///
/// # Safety
/// `graph` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn idom_graph_period(graph: *const IdomGraph, out: *mut size_t) -> IdomStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = period(g);
        Ok(())
    })
}

/// Normalized arc-list text. Release with [`idom_string_free`].
///
/// # Safety
/// `graph` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn idom_graph_to_arc_list(graph: *const IdomGraph, out: *mut *mut c_char) -> IdomStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = CString::new(write_arc_list(g)).expect("arc lists contain no NUL").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn idom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Runs a solver. `budget == 0` means the default work budget and
/// `threads == 0` means one thread.
///
/// # Safety
/// `graph` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn idom_solve(
    graph: *const IdomGraph,
    method: IdomMethod,
    budget: u64,
    threads: size_t,
    out: *mut *mut IdomSolution,
) -> IdomStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let mut config = SolverConfig::default().with_threads(threads);
        if budget > 0 {
            config = config.with_budget(budget);
        }
        let outcome = match method {
            IdomMethod::Auto => solve_auto(g, &config),
            IdomMethod::Dag => solve_dag(g),
            IdomMethod::Even => solve_even_period(g),
            IdomMethod::Bipartite => solve_bipartite(g, None),
            IdomMethod::Layers => solve_strong_by_layers(g, &config),
            IdomMethod::Exact => solve_exact(g, &config),
            IdomMethod::Brute => brute_force_solve(g, BRUTE_DEFAULT_CAP),
        }?;
        let vertices = outcome.set().map(VertexSet::to_vec).unwrap_or_default();
        *out = Box::into_raw(Box::new(IdomSolution { outcome, vertices }));
        Ok(())
    })
}

/// # Safety
/// `solution` must be NULL or a handle from [`idom_solve`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn idom_solution_free(solution: *mut IdomSolution) {
    if !solution.is_null() {
        drop(Box::from_raw(solution));
    }
}

/// True when an IDS was found. False for NULL.
///
/// # Safety
/// `solution` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn idom_solution_found(solution: *const IdomSolution) -> bool {
    solution.as_ref().is_some_and(|s| s.outcome.is_found())
}

/// Number of vertices in the found set (0 when none was found).
///
/// # Safety
/// `solution` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn idom_solution_size(solution: *const IdomSolution) -> size_t {
    solution.as_ref().map_or(0, |s| s.vertices.len())
}

/// Copies up to `capacity` vertex ids, ascending, into `buffer` and returns
/// the full set size.
///
/// # Safety
/// `solution` must be NULL or a live handle; `buffer` must have room for
/// `capacity` values (it may be NULL when `capacity == 0`).
#[no_mangle]
pub unsafe extern "C" fn idom_solution_vertices(
    solution: *const IdomSolution,
    buffer: *mut size_t,
    capacity: size_t,
) -> size_t {
    let Some(s) = solution.as_ref() else { return 0 };
    let count = s.vertices.len().min(capacity);
    if count > 0 && !buffer.is_null() {
        ptr::copy_nonoverlapping(s.vertices.as_ptr(), buffer, count);
    }
    s.vertices.len()
}

/// Layer seeds tried by the search.
///
/// # Safety
/// `solution` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn idom_solution_seeds_explored(solution: *const IdomSolution) -> u64 {
    solution.as_ref().map_or(0, |s| s.outcome.stats.seeds_explored)
}

/// Checks whether `vertices[0..len]` is independent and dominating.
/// Either output pointer may be NULL.
///
/// # Safety
/// `graph` must be a live handle and `vertices` must point to `len`
/// readable values (or be NULL when `len == 0`).
#[no_mangle]
pub unsafe extern "C" fn idom_verify(
    graph: *const IdomGraph,
    vertices: *const size_t,
    len: size_t,
    independent: *mut bool,
    dominating: *mut bool,
) -> IdomStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let members = if len == 0 {
            &[][..]
        } else if vertices.is_null() {
            return Err(null("vertices"));
        } else {
            std::slice::from_raw_parts(vertices, len)
        };
        let n = g.vertex_count();
        if let Some(&v) = members.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n }.into());
        }
        let report = is_ids(g, &VertexSet::from_vertices(n, members.iter().copied()))?;
        if let Some(out) = independent.as_mut() {
            *out = report.independent;
        }
        if let Some(out) = dominating.as_mut() {
            *out = report.dominating;
        }
        Ok(())
    })
}
