//! C ABI over the qcrystal library.
//!
//! Conventions: every function returns a [`QcStatus`]; results come back
//! through out-pointers. Strings are UTF-8, NUL-terminated, allocated by
//! this library, and must be released with [`qc_string_free`]. Graphs and
//! transition matrices are opaque handles released with their own free
//! functions. Words use the ASCII serialization over '1'/'2'; an operator
//! result that kills its input is returned as the literal string "0".

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

use qcrystal::error::Error;
use qcrystal::gbasis::{gbasis, Transition};
use qcrystal::graph::{build_graph, component_of, gl2_split, CrystalGraph, Mode};
use qcrystal::ktheory::{apply_operator, BasisTag, KClass, KOperator};
use qcrystal::render;
use qcrystal::verify::{run_suite, Suite};
use qcrystal::word::{self, CrystalOp, Word};
use qcrystal::{graph, lowest};

/// Status code of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidWord = 2,
    CapExceeded = 3,
    DomainError = 4,
    ConsistencyError = 5,
    VerifyFailed = 6,
    InternalError = 7,
}

/// Operator family generating edges.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcMode {
    Gl2 = 0,
    Q2 = 1,
}

impl From<QcMode> for Mode {
    fn from(m: QcMode) -> Mode {
        match m {
            QcMode::Gl2 => Mode::Gl2,
            QcMode::Q2 => Mode::Q2,
        }
    }
}

/// The four crystal operators on words.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcWordOp {
    EEven = 0,
    FEven = 1,
    EOdd = 2,
    FOdd = 3,
}

impl From<QcWordOp> for CrystalOp {
    fn from(op: QcWordOp) -> CrystalOp {
        match op {
            QcWordOp::EEven => CrystalOp::EEven,
            QcWordOp::FEven => CrystalOp::FEven,
            QcWordOp::EOdd => CrystalOp::EOdd,
            QcWordOp::FOdd => CrystalOp::FOdd,
        }
    }
}

/// Opaque crystal graph handle.
pub struct QcGraph {
    inner: CrystalGraph,
}

/// Opaque transition-matrix handle.
pub struct QcTransition {
    inner: Transition,
}

fn status_of(err: &Error) -> QcStatus {
    match err {
        Error::InvalidWord(_) => QcStatus::InvalidWord,
        Error::SizeLimit { .. } => QcStatus::CapExceeded,
        Error::Consistency(_) => QcStatus::ConsistencyError,
        _ => QcStatus::DomainError,
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Option<&'a str> {
    if p.is_null() {
        return None;
    }
    CStr::from_ptr(p).to_str().ok()
}

fn give_string(s: String, out: *mut *mut c_char) -> QcStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            QcStatus::Ok
        }
        Err(_) => QcStatus::InternalError,
    }
}

fn guarded<F: FnOnce() -> QcStatus>(f: F) -> QcStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(QcStatus::InternalError)
}

unsafe fn parse_word(p: *const c_char) -> Result<Word, QcStatus> {
    let s = read_str(p).ok_or(QcStatus::NullPointer)?;
    s.parse().map_err(|_| QcStatus::InvalidWord)
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must have been returned by a function of this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn qc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Applies a crystal operator to a word. `*out` receives the image word,
/// or "0" when the operator kills the input.
///
/// # Safety
/// `word` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_word_apply(
    op: QcWordOp,
    word: *const c_char,
    out: *mut *mut c_char,
) -> QcStatus {
    if out.is_null() {
        return QcStatus::NullPointer;
    }
    let w = match parse_word(word) {
        Ok(w) => w,
        Err(s) => return s,
    };
    guarded(|| {
        let image = word::apply(op.into(), &w);
        give_string(word::display_opt(image), out)
    })
}

/// Number of uncancelled "-" symbols of the word.
///
/// # Safety
/// `word` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_eps(word: *const c_char, out: *mut u32) -> QcStatus {
    if out.is_null() {
        return QcStatus::NullPointer;
    }
    match parse_word(word) {
        Ok(w) => {
            *out = word::eps(&w);
            QcStatus::Ok
        }
        Err(s) => s,
    }
}

/// Number of uncancelled "+" symbols of the word.
///
/// # Safety
/// `word` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_phi(word: *const c_char, out: *mut u32) -> QcStatus {
    if out.is_null() {
        return QcStatus::NullPointer;
    }
    match parse_word(word) {
        Ok(w) => {
            *out = word::phi(&w);
            QcStatus::Ok
        }
        Err(s) => s,
    }
}

/// Letter counts of the word: `m1` ones and `m2` twos.
///
/// # Safety
/// `word` must be a valid NUL-terminated string; `m1`, `m2` writable.
#[no_mangle]
pub unsafe extern "C" fn qc_weight(word: *const c_char, m1: *mut u32, m2: *mut u32) -> QcStatus {
    if m1.is_null() || m2.is_null() {
        return QcStatus::NullPointer;
    }
    match parse_word(word) {
        Ok(w) => {
            let wt = word::wt(&w);
            *m1 = wt.m1;
            *m2 = wt.m2;
            QcStatus::Ok
        }
        Err(s) => s,
    }
}

/// Whether the word is killed by every raising operator of the mode.
///
/// # Safety
/// `word` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_is_highest(
    word: *const c_char,
    mode: QcMode,
    out: *mut bool,
) -> QcStatus {
    if out.is_null() {
        return QcStatus::NullPointer;
    }
    match parse_word(word) {
        Ok(w) => {
            *out = graph::is_highest(&w, mode.into());
            QcStatus::Ok
        }
        Err(s) => s,
    }
}

/// Whether the word is a lowest weight vector.
///
/// # Safety
/// `word` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_is_lowest(word: *const c_char, out: *mut bool) -> QcStatus {
    if out.is_null() {
        return QcStatus::NullPointer;
    }
    match parse_word(word) {
        Ok(w) => {
            *out = graph::is_lowest(&w);
            QcStatus::Ok
        }
        Err(s) => s,
    }
}

/// Whether every suffix containing a 1 has strictly more 2s than 1s.
///
/// # Safety
/// `word` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_is_srlp(word: *const c_char, out: *mut bool) -> QcStatus {
    if out.is_null() {
        return QcStatus::NullPointer;
    }
    match parse_word(word) {
        Ok(w) => {
            *out = lowest::is_srlp(&w);
            QcStatus::Ok
        }
        Err(s) => s,
    }
}

/// The distinguished basis vector of the word, as a signed sum such as
/// "+112 -121".
///
/// # Safety
/// `word` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_gbasis(word: *const c_char, out: *mut *mut c_char) -> QcStatus {
    if out.is_null() {
        return QcStatus::NullPointer;
    }
    let w = match parse_word(word) {
        Ok(w) => w,
        Err(s) => return s,
    };
    if w.len() > graph::COMPONENT_CAP {
        return QcStatus::CapExceeded;
    }
    guarded(|| give_string(gbasis(&w).to_string(), out))
}

/// Segment decomposition of a lowest word, as a JSON document.
///
/// # Safety
/// `word` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_decompose_json(word: *const c_char, out: *mut *mut c_char) -> QcStatus {
    if out.is_null() {
        return QcStatus::NullPointer;
    }
    let w = match parse_word(word) {
        Ok(w) => w,
        Err(s) => return s,
    };
    guarded(|| match render::DecompositionView::compute(&w) {
        Ok(view) => give_string(view.to_json().to_string(), out),
        Err(e) => status_of(&e),
    })
}

/// Connected component of a seed word with its even split and (when the
/// component has a lowest word) the segment decomposition, as JSON.
///
/// # Safety
/// `seed` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_component_json(
    seed: *const c_char,
    mode: QcMode,
    out: *mut *mut c_char,
) -> QcStatus {
    if out.is_null() {
        return QcStatus::NullPointer;
    }
    let w = match parse_word(seed) {
        Ok(w) => w,
        Err(s) => return s,
    };
    if w.len() > graph::COMPONENT_CAP {
        return QcStatus::CapExceeded;
    }
    guarded(|| {
        let comp = component_of(&w, mode.into());
        let split = gl2_split(&comp);
        give_string(render::component_to_json(&comp, &split).to_string(), out)
    })
}

/// Builds the crystal graph on all words of length `n`. The handle must be
/// released with [`qc_graph_free`]. `cap` of 0 means the default cap.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_build(
    n: u32,
    mode: QcMode,
    cap: u32,
    out: *mut *mut QcGraph,
) -> QcStatus {
    if out.is_null() {
        return QcStatus::NullPointer;
    }
    let cap = if cap == 0 {
        graph::DEFAULT_GRAPH_CAP
    } else {
        cap as usize
    };
    guarded(|| match build_graph(n as usize, mode.into(), cap) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(QcGraph { inner: g }));
            QcStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Number of nodes; 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_node_count(g: *const QcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.nodes.len())
}

/// Number of edges; 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_edge_count(g: *const QcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.edges.len())
}

/// DOT rendering of the graph; `ascii` selects "1bar" labels on dashed
/// edges.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_dot(
    g: *const QcGraph,
    ascii: bool,
    out: *mut *mut c_char,
) -> QcStatus {
    let (Some(g), false) = (g.as_ref(), out.is_null()) else {
        return QcStatus::NullPointer;
    };
    guarded(|| give_string(render::graph_to_dot(&g.inner, ascii), out))
}

/// JSON rendering of the graph, including its components.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_json(g: *const QcGraph, out: *mut *mut c_char) -> QcStatus {
    let (Some(g), false) = (g.as_ref(), out.is_null()) else {
        return QcStatus::NullPointer;
    };
    guarded(|| give_string(render::graph_to_json(&g.inner).to_string(), out))
}

/// Releases a graph handle. NULL is ignored.
///
/// # Safety
/// `g` must be NULL or a live graph handle, not freed twice.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_free(g: *mut QcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Builds both transition matrices at length `n`. `cap` of 0 means the
/// default cap. The handle must be released with [`qc_transition_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_transition_new(
    n: u32,
    cap: u32,
    out: *mut *mut QcTransition,
) -> QcStatus {
    if out.is_null() {
        return QcStatus::NullPointer;
    }
    let cap = if cap == 0 {
        graph::DEFAULT_MATRIX_CAP
    } else {
        cap as usize
    };
    guarded(|| match Transition::new(n as usize, cap) {
        Ok(t) => {
            *out = Box::into_raw(Box::new(QcTransition { inner: t }));
            QcStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// The simple class of `label` in the Verma basis, e.g. "+[M(21)] -[M(12)]".
///
/// # Safety
/// `t` must be a live handle; `label` a valid string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qc_transition_simple_to_verma(
    t: *const QcTransition,
    label: *const c_char,
    out: *mut *mut c_char,
) -> QcStatus {
    let (Some(t), false) = (t.as_ref(), out.is_null()) else {
        return QcStatus::NullPointer;
    };
    let label = match parse_word(label) {
        Ok(w) => w,
        Err(s) => return s,
    };
    guarded(|| match t.inner.simple_to_verma(&label) {
        Ok(row) => give_string(row.display(BasisTag::Verma), out),
        Err(e) => status_of(&e),
    })
}

/// The Verma class of `label` in the simple basis, e.g. "+[L(21)] +[L(12)]".
///
/// # Safety
/// `t` must be a live handle; `label` a valid string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qc_transition_verma_to_simple(
    t: *const QcTransition,
    label: *const c_char,
    out: *mut *mut c_char,
) -> QcStatus {
    let (Some(t), false) = (t.as_ref(), out.is_null()) else {
        return QcStatus::NullPointer;
    };
    let label = match parse_word(label) {
        Ok(w) => w,
        Err(s) => return s,
    };
    guarded(|| match t.inner.verma_to_simple(&label) {
        Ok(row) => give_string(row.display(BasisTag::Simple), out),
        Err(e) => status_of(&e),
    })
}

/// Releases a transition handle. NULL is ignored.
///
/// # Safety
/// `t` must be NULL or a live handle, not freed twice.
#[no_mangle]
pub unsafe extern "C" fn qc_transition_free(t: *mut QcTransition) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Applies a named operator ("E", "F", "H", "Ebar", "Fbar") to a class
/// expression such as "[L(22)]" or "+[M(21)] -[M(12)]", returning the
/// result in the basis of the input. `matrix_cap` of 0 means the default.
///
/// # Safety
/// `op` and `class` must be valid strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_apply_class(
    op: *const c_char,
    class: *const c_char,
    matrix_cap: u32,
    out: *mut *mut c_char,
) -> QcStatus {
    if out.is_null() {
        return QcStatus::NullPointer;
    }
    let (Some(op), Some(class)) = (read_str(op), read_str(class)) else {
        return QcStatus::NullPointer;
    };
    let Ok(op) = KOperator::from_str(op) else {
        return QcStatus::DomainError;
    };
    let cap = if matrix_cap == 0 {
        graph::DEFAULT_MATRIX_CAP
    } else {
        matrix_cap as usize
    };
    guarded(|| {
        let (class, basis) = match KClass::parse(class) {
            Ok(parsed) => parsed,
            Err(e) => return status_of(&e),
        };
        let result = match basis {
            BasisTag::Verma => apply_operator(op, &class),
            BasisTag::Simple => {
                let trans = match Transition::new(class.n(), cap) {
                    Ok(t) => t,
                    Err(e) => return status_of(&e),
                };
                match trans
                    .to_verma(&class)
                    .map(|v| apply_operator(op, &v))
                    .and_then(|v| trans.to_simple(&v))
                {
                    Ok(r) => r,
                    Err(e) => return status_of(&e),
                }
            }
        };
        give_string(result.display(basis), out)
    })
}

/// Runs a named verification suite ("axioms", "oracle", "srlp", "hat",
/// "c1r", "gbasis", "ktheory", "parabolic", "all"). `n_max` of 0 keeps
/// each check's default bound; `matrix_cap` of 0 means the default cap.
/// `*out_json` receives the full report; the return value is `Ok` when
/// every check passed and `VerifyFailed` otherwise.
///
/// # Safety
/// `suite` must be a valid string; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qc_verify(
    suite: *const c_char,
    n_max: u32,
    matrix_cap: u32,
    out_json: *mut *mut c_char,
) -> QcStatus {
    if out_json.is_null() {
        return QcStatus::NullPointer;
    }
    let Some(suite) = read_str(suite) else {
        return QcStatus::NullPointer;
    };
    let Ok(suite) = Suite::from_str(suite) else {
        return QcStatus::DomainError;
    };
    let cap = if matrix_cap == 0 {
        graph::DEFAULT_MATRIX_CAP
    } else {
        matrix_cap as usize
    };
    let bound = if n_max == 0 { None } else { Some(n_max) };
    guarded(|| {
        let report = run_suite(suite, bound, cap);
        let passed = report.passed();
        let status = give_string(render::suite_report_to_json(&report).to_string(), out_json);
        if status != QcStatus::Ok {
            return status;
        }
        if passed {
            QcStatus::Ok
        } else {
            QcStatus::VerifyFailed
        }
    })
}
