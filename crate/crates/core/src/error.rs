use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Aut { line: usize, message: String },

    #[error("{line}:{column}: {message}")]
    Term {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("undefined process name `{0}`")]
    UndefinedName(String),

    #[error("duplicate definition of `{0}`")]
    DuplicateDefinition(String),

    #[error("unguarded recursion through `{0}`")]
    UnguardedRecursion(String),

    #[error("state index {index} out of range (state count {count})")]
    StateOutOfRange { index: usize, count: usize },

    #[error("action index {index} out of range (alphabet size {count})")]
    ActionOutOfRange { index: usize, count: usize },

    #[error("unknown action `{0}`")]
    UnknownAction(String),

    #[error("carrier mismatch: {left} vs {right}")]
    CarrierMismatch { left: usize, right: usize },

    #[error("alphabet mismatch: expected {expected} actions, found {found}")]
    AlphabetMismatch { expected: usize, found: usize },

    #[error("alphabets differ: {left:?} vs {right:?}")]
    AlphabetsDiffer {
        left: Vec<String>,
        right: Vec<String>,
    },

    #[error("relation is {rows}x{cols}, expected {want_rows}x{want_cols}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        want_rows: usize,
        want_cols: usize,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid order expression: {0}")]
    InvalidOrder(String),

    #[error("{what} needs {needed} enumeration steps, over the cap of {cap}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("union of closed relations is not closed; the step predicate is not monotone")]
    NotClosed,

    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
