use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = 1")]
    PoleAtOne,
    #[error("shape error: {0}")]
    ShapeError(String),
    #[error("symmetrizer degenerate: {0}")]
    SymmetrizerDegenerate(String),
    #[error("pattern error: {0}")]
    PatternError(String),
    #[error("certificate failure: {0}")]
    CertificateFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
