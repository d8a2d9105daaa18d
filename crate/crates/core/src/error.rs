use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The isotropization step produced a vector (numerically) in the span of its predecessors.
    #[error("vector {index} is linearly dependent on its predecessors (relative norm {ratio:.3e})")]
    LinearDependence { index: usize, ratio: f64 },

    #[error("Krylov sequence broke down at step {step}")]
    Breakdown { step: usize },

    #[error("matrix is rank deficient: rank {rank} < {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("basis is not isotropic: defect {defect:.3e} exceeds {threshold:.3e}")]
    IsotropyViolation { defect: f64, threshold: f64 },

    #[error("matrix is not skew-Hamiltonian: defect {defect:.3e} exceeds {threshold:.3e}")]
    NotSkewHamiltonian { defect: f64, threshold: f64 },

    #[error("matrix is not skew-symmetric: defect {defect:.3e}")]
    NotSkewSymmetric { defect: f64 },

    #[error("eigenvalue {0} has no complex-conjugate partner")]
    ConjugationViolation(num_complex::Complex64),

    #[error("basis is not orthonormal: defect {defect:.3e}")]
    OrthonormalityViolation { defect: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }
}
