use thiserror::Error;

use crate::subset::Subset;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph parameters n={n}, k={k}: need 0 < k < n <= 64")]
    InvalidParams { n: u32, k: u32 },

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("parameter mismatch: {0}")]
    ParamsMismatch(String),

    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A block set failed the covering (or Turán) property; `witness` is an
    /// uncovered k-subset.
    #[error("blocks do not form a valid {role}: {witness} is not handled by any block")]
    InvalidBlocks { role: &'static str, witness: Subset },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("infeasible instance: element {0} lies in no set")]
    Infeasible(usize),

    #[error("resource budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
