use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid multi-index {0}")]
    InvalidIndex(String),
    #[error("index {0} is not admissible (k1 must be >= 2)")]
    NotAdmissible(String),
    #[error("word {0} is not in H^1 (must end in y)")]
    NotInH1(String),
    #[error("word {0} diverges at z = 1")]
    DivergentAtOne(String),
    #[error("invalid mu sequence entry {0} (expected 1, 2 or 3)")]
    InvalidMu(u8),
    #[error("argument z = {0} outside the supported interval")]
    Domain(f64),
    #[error("precision unreachable: {0}")]
    PrecisionUnreachable(String),
    #[error("invalid evaluation context: {0}")]
    InvalidContext(String),
    #[error("gamma parameter {0} is a pole")]
    Pole(f64),
    #[error("series exponential needs a zero constant term")]
    NonzeroConstantTerm,
    #[error("Euler constant does not cancel: residual linear form {0:?}")]
    EulerConstantResidue([i64; 3]),
}

pub type Result<T> = std::result::Result<T, Error>;
