use thiserror::Error;

use crate::automaton::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(ValidationReport),
    #[error("invalid 1dfa: {0}")]
    InvalidDfa(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("symbol index {0} is outside the alphabet")]
    SymbolOutOfRange(usize),
    #[error("alphabets differ: {0:?} vs {1:?}")]
    AlphabetMismatch(Vec<String>, Vec<String>),
    #[error("empty initial sweep: the left end-marker has no transition from the initial state")]
    EmptyInitialSweep,
    #[error("witness parameters violate k > l > 0 and l >= m > 0: {0}")]
    WitnessParams(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
