//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors produced by quaternionic linear algebra and frame computations.
#[derive(Debug, Error)]
pub enum Error {
    /// Inversion of a quaternion with zero modulus.
    #[error("zero divisor: quaternion modulus is zero")]
    ZeroDivisor,

    /// An operation requiring a Hermitian matrix received one that is not.
    #[error("matrix is not Hermitian (relative residual {residual:.3e})")]
    NotHermitian { residual: f64 },

    /// The eigensolver did not reduce the off-diagonal mass within the sweep budget.
    #[error("Hermitian eigensolver did not converge after {sweeps} sweeps")]
    EigenConvergence { sweeps: usize },

    /// Eigenvalues of an embedded quaternionic matrix failed to come in pairs,
    /// which signals an eigensolver breakdown.
    #[error("eigenvalue pairing failure at index {index}: gap {gap:.3e}")]
    PairingFailure { index: usize, gap: f64 },

    /// Spectral function of an operator whose spectrum does not admit it.
    #[error("singular operator: smallest eigenvalue {min_eigenvalue:.3e}")]
    SingularOperator { min_eigenvalue: f64 },

    /// A complex matrix is not in the image of the quaternionic embedding.
    #[error("input is not an embedded quaternionic matrix (symmetry residual {residual:.3e})")]
    EmbeddingSymmetry { residual: f64 },

    /// Orthonormalization received vectors that span nothing.
    #[error("all input vectors are numerically zero")]
    EmptySpan,

    /// An operator maps the whole subspace to zero.
    #[error("zero image: the operator annihilates the subspace")]
    ZeroImage,

    /// The family fails the lower frame inequality.
    #[error("not a frame: lower bound {lower:.3e} (upper {upper:.3e})")]
    NotAFrame { lower: f64, upper: f64 },

    /// Invalid input data: shape, weight, finiteness or schema violations.
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
