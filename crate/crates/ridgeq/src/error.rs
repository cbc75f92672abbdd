//! Error type shared by every module.

/// Errors reported by validation and numerical routines.
///
/// `context` names the operand or operation that failed so callers can tell
/// which of several matrix arguments was rejected.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("{context}: non-finite entry at ({row}, {col})")]
    NonFinite {
        context: &'static str,
        row: usize,
        col: usize,
    },

    #[error("{context}: expected {expected}, got {found}")]
    ShapeMismatch {
        context: &'static str,
        expected: String,
        found: String,
    },

    #[error("{context}: matrix is not symmetric (relative asymmetry {asymmetry:.3e})")]
    NotSymmetric {
        context: &'static str,
        asymmetry: f64,
    },

    #[error("{context}: matrix is not positive definite (minimum eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveDefinite {
        context: &'static str,
        min_eigenvalue: f64,
    },

    #[error("{context}: matrix is not positive semidefinite (minimum eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveSemidefinite {
        context: &'static str,
        min_eigenvalue: f64,
    },

    #[error("{context}: rank is {found}, need {expected}")]
    RankDeficient {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{context}: linear system is numerically singular (reciprocal condition estimate {rcond:.3e})")]
    Singular { context: &'static str, rcond: f64 },

    #[error("{context}: eigenvalue/singular value iteration failed to converge")]
    ConvergenceFailed { context: &'static str },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("no penalty-equalizing gamma exists: the rescaled penalties must share a range and commute")]
    NoEqualizingGamma,

    #[error("perturbation scale {eps:.6e} is not below the admissibility bound {bound:.6e}")]
    EpsilonOutOfRange { eps: f64, bound: f64 },

    #[error("cross-check disagreement in {context}: {details}")]
    CrossCheck {
        context: &'static str,
        details: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
