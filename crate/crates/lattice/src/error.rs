use thiserror::Error;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("gram matrix is degenerate")]
    Degenerate,
    #[error("gram matrix is not even")]
    NotEven,
    #[error("signature mismatch: expected {expected}, found ({pos}, {neg})")]
    SignatureMismatch {
        expected: &'static str,
        pos: usize,
        neg: usize,
    },
    #[error("matrix is not an isometry of the lattice")]
    NotIsometry,
    #[error("vector is not a root (self-pairing must be -2)")]
    NotRoot,
    #[error("embedding is not isometric")]
    NotIsometric,
    #[error("embedding is not primitive")]
    NotPrimitive,
    #[error("lattice is not negative-definite")]
    NotNegativeDefinite,
    #[error("norm bound must be negative")]
    BadNormBound,
    #[error("{0}")]
    Invalid(String),
}
