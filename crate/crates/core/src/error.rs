use thiserror::Error;

/// Errors raised by constructors and evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("incompatible sizes: expected {expected} entries, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("order m = {m} is out of range for k = {k} (need {min} <= m <= {max})")]
    OrderOutOfRange { m: usize, k: usize, min: usize, max: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("curve is negatively oriented or encloses no area (F = {area})")]
    Orientation { area: f64 },

    #[error("curve is degenerate: {0}")]
    DegenerateCurve(String),

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for errors that mean "the theorem does not apply to this input"
    /// as opposed to a malformed request.
    pub fn is_hypothesis(&self) -> bool {
        matches!(
            self,
            Error::Hypothesis(_) | Error::Orientation { .. } | Error::DegenerateCurve(_)
        )
    }
}
