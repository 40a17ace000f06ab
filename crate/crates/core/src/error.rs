use thiserror::Error;

use crate::hopf::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("fields of characteristic 2 are not supported")]
    Characteristic2,

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(crate::Field, crate::Field),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("antipode not invertible")]
    SingularAntipode,

    #[error("Hopf axioms failed: {0}")]
    AxiomsFailed(Box<AxiomReport>),

    #[error("matched pair axioms failed:\n{0}")]
    PairCheckFailed(Box<crate::report::Report>),

    #[error("matched pair is not verified")]
    UnverifiedPair,

    #[error("invalid input: {0}")]
    Input(String),

    #[error("exhaustive scan exceeds {limit} candidate evaluations; supply explicit candidates instead")]
    ScanBound { limit: u64 },

    #[error("operation needs a prime field, got {0}")]
    NeedsPrimeField(crate::Field),

    #[error("unsupported structure: {0}")]
    Unsupported(String),

    /// A result that contradicts a mathematical invariant; signals a bug or
    /// corrupt input rather than a user mistake.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
