use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in the supported range 2..=2^31-1")]
    NotPrime(u64),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("operands live in different polynomial rings")]
    RingMismatch,

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("ideal is not monomial")]
    NotMonomial,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("falsified expectation: {0}")]
    FalsifiedExpectation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
