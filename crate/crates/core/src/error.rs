use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index was below the smallest value for which the object is defined.
    #[error("{what}: index {index} is out of domain (expected >= {min})")]
    IndexOutOfDomain {
        what: &'static str,
        index: usize,
        min: usize,
    },

    #[error("invalid symbol {symbol:?} at position {position} (expected '0' or '1')")]
    InvalidSymbol { symbol: char, position: usize },

    #[error("{0}: empty input")]
    EmptyInput(&'static str),

    #[error("non-canonical Zeckendorf digits: adjacent ones at position {position}")]
    AdjacentOnes { position: usize },

    #[error("directive d_{index} = {value} is invalid (directives must be >= 1)")]
    InvalidDirective { index: usize, value: u64 },

    #[error("directive d_{index} requested but only {available} directives were given (use cycling to extend)")]
    DirectivesExhausted { index: usize, available: usize },

    #[error("unknown identity {0:?} (expected I1..I16)")]
    UnknownIdentity(String),

    #[error("unknown method {0:?}")]
    UnknownMethod(String),

    #[error("factorization cancelled")]
    Cancelled,
}
