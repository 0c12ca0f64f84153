use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty sequence")]
    Empty,
    #[error("malformed token `{0}`")]
    Malformed(String),
    #[error("zero exponent in token `{0}`")]
    ZeroExponent(String),
    #[error("negative term in token `{0}`")]
    Negative(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayOffError {
    #[error("position {k} out of range 1..={n}")]
    OutOfRange { k: usize, n: usize },
    #[error("laying off d_{k} = {degree} needs {degree} other terms but only {available} exist")]
    NotEnoughTerms {
        k: usize,
        degree: u32,
        available: usize,
    },
    #[error("laying off d_{k} drives term d_{position} below zero")]
    Underflow { k: usize, position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graphs are limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),
    #[error("invalid pattern parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("sequence {0} is not graphic")]
    NotGraphic(String),
    #[error("sequence {0} contains a zero term")]
    ZeroTerm(String),
    #[error("sequence has {n} terms, at least {min} required")]
    TooShort { n: usize, min: usize },
    #[error("no characterization available for target {0}")]
    NoCharacterization(String),
    #[error("{0}")]
    OutOfRange(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("sequence length {n} exceeds the oracle cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("oracle cap {0} exceeds the hard maximum of 16")]
    CapTooLarge(usize),
    #[error("pattern has {pattern} vertices but the sequence only {n}")]
    PatternTooLarge { pattern: usize, n: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}
