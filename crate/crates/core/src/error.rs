use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// The generator is not in the free `[I | M]` form the checks require.
    #[error("unsupported generator form: {0}")]
    UnsupportedForm(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Full codeword enumeration was requested beyond the supported dimension.
    #[error("dimension {k} exceeds the enumeration cap of {cap}; use min_distance or low-weight counts")]
    Capacity { k: usize, cap: usize },

    /// No weight-enumerator family matched the observed coefficients.
    #[error("no enumerator family for length {length} matches A_10..A_14 = {signature:?}")]
    Classification { length: usize, signature: [u64; 5] },

    #[error("unknown enumerator family `{0}`")]
    UnknownFamily(String),

    /// A construction produced a result that violates its own guarantee.
    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
