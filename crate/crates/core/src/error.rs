use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Incompatible matrix or vector dimensions.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A matrix entry is NaN or infinite.
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    /// A constructed object would exceed the configured size cap.
    #[error("dimension {dim} exceeds the configured maximum {max}")]
    SizeLimit { dim: usize, max: usize },

    /// Hermiticity violated beyond tolerance.
    #[error("matrix is not Hermitian: asymmetry {asymmetry:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { asymmetry: f64, tol: f64 },

    /// A density-operator invariant failed validation.
    #[error("density operator violates {invariant}: {detail}")]
    InvalidDensity {
        invariant: &'static str,
        detail: String,
    },

    /// A precondition on scalar arguments failed.
    #[error("domain error: {0}")]
    Domain(String),

    /// The leading virtual block carries (numerically) zero weight, so the
    /// factor state is undefined.
    #[error("degenerate support: leading-block weight {0:.3e} is numerically zero")]
    DegenerateSupport(f64),

    /// Ground level of the Hamiltonian is degenerate; subspace cooling is
    /// not implemented.
    #[error("degenerate ground space: gap {0:.3e} below tolerance; unsupported")]
    DegenerateGroundSpace(f64),

    /// The requested condition cannot be met by any parameter value.
    #[error("unattainable: {0}")]
    Unattainable(String),

    /// Two independent computation routes disagreed.
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
