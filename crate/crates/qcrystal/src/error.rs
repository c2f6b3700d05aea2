use thiserror::Error;

/// Errors surfaced by the library. Operator "kills the vector" results are
/// `None`, never an error; these variants are reserved for genuine misuse
/// (bad input, exceeded cap) or internal consistency violations.
#[derive(Debug, Error)]
pub enum Error {
    #[error(
        "invalid word {0:?}: expected a nonempty string over {{'1','2'}} of length at most 32"
    )]
    InvalidWord(String),

    #[error("{what} limited to n <= {cap}, got n = {n}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("{0} is not a lowest weight vector")]
    NotLowest(String),

    #[error("position {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("insertion point {k} out of range 0..={max}")]
    InsertionOutOfRange { k: usize, max: usize },

    #[error("{0}")]
    Domain(String),

    #[error("cannot parse class expression {input:?}: {reason}")]
    ParseClass { input: String, reason: String },

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
