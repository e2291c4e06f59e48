use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("polynomial has degree 0 in {0}")]
    ZeroDegree(crate::Var),
    #[error("inexact division in fraction-free elimination")]
    InexactDivision,
    #[error("parse error: {0}")]
    Parse(String),
}
