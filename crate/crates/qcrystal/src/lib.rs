//! Exact combinatorics of the q(2)/gl(2) crystal on words over {1,2}.
//!
//! The crate models, in exact integer arithmetic:
//!
//! - words of length `n` as vertices of the n-fold tensor power of the
//!   two-element crystal, with the even operators acting through the
//!   reduced +/- signature and the odd operators acting on the last
//!   letter ([`word`]), cross-checked against a literal recursive
//!   evaluation of the tensor product rule ([`tensor_rule`]);
//! - crystal graphs, connected components, highest/lowest weight vectors,
//!   and the even/odd component structure ([`graph`]), together with the
//!   segment decomposition of lowest words and the deletion bijection
//!   that reduces a component to an all-twos core ([`lowest`]);
//! - the distinguished (dual canonical) basis of the tensor power, built
//!   by prepend/append/splice rules, and the unitriangular change of
//!   basis between simple and Verma classes ([`gbasis`], [`tensor`]);
//! - the induced operators on classes, their defining relations, and the
//!   label-by-label match between class operators and crystal operators
//!   ([`ktheory`]);
//! - descent index sets of labels, their invariance along components,
//!   parabolic subcrystal closure, and the two-part split of components
//!   ([`parabolic`]).
//!
//! Every structural claim is wired into an executable check; [`verify`]
//! aggregates them into named exhaustive suites over all `2^n` words up
//! to configurable bounds. The `qcrystal` binary exposes everything on
//! the command line with deterministic DOT/JSON/TSV/text output.
//!
//! Operators that kill an element return `None` (serialized as `"0"`);
//! errors are reserved for misuse and resource caps ([`error`]).

pub mod error;
pub mod gbasis;
pub mod graph;
pub mod ktheory;
pub mod lowest;
pub mod parabolic;
pub mod render;
pub mod report;
pub mod tensor;
pub mod tensor_rule;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
