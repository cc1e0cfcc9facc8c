use thiserror::Error;

/// Errors raised by the model, rate, selection and sweep routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum JrcError {
    #[error("invalid configuration: `{field}` {reason}")]
    InvalidConfig { field: &'static str, reason: String },

    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    DimensionMismatch {
        context: &'static str,
        expected: String,
        actual: String,
    },

    #[error("channel matrix is identically zero; no combiner exists")]
    DegenerateChannel,

    #[error("matrix is not Hermitian (max asymmetry {0:e})")]
    NotHermitian(f64),

    #[error("analog precoder violates the constant-modulus constraint")]
    NotConstantModulus,

    #[error("{0} must be nonnegative")]
    Negative(&'static str),

    #[error("interference plus noise is zero; rate is undefined")]
    ZeroDenominator,

    #[error("weighting factor rho={0} outside [0, 1]")]
    RhoOutOfRange(f64),

    #[error("relaxed selection entry {index} = {value} outside [0, 1]")]
    RelaxedOutOfRange { index: usize, value: f64 },

    #[error("exhaustive search limited to {limit} RF chains, got {n_rf}")]
    EnumerationTooLarge { n_rf: usize, limit: usize },

    #[error("RF-chain count {count} outside [1, {n_rf}]")]
    RfCountOutOfRange { count: usize, n_rf: usize },

    #[error("{0} must not be empty")]
    Empty(&'static str),
}

pub type Result<T> = std::result::Result<T, JrcError>;

pub(crate) fn dim_mismatch(
    context: &'static str,
    expected: impl ToString,
    actual: impl ToString,
) -> JrcError {
    JrcError::DimensionMismatch {
        context,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}
