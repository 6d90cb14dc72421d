use thiserror::Error;

/// Errors raised by the engines and formulas.
///
/// `Inconsistent` is special: it means two independent computations of the
/// same quantity disagreed, which is a bug or a falsified identity rather
/// than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("not a numerical semigroup: gcd of generators is {0}")]
    NotNumericalSemigroup(u64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("semigroup mismatch: {0} vs {1}")]
    SemigroupMismatch(String, String),

    #[error("containment violated: {0}")]
    Containment(String),

    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("coefficient not representable in {field}: {value}")]
    Coefficient { field: String, value: String },

    #[error("precision too low: need coefficients below t^{needed}, have below t^{have}")]
    Precision { needed: i64, have: i64 },

    #[error("tail certification failed: {0}")]
    Certification(String),

    #[error("undecidable: {0}")]
    Undecidable(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn is_consistency_failure(&self) -> bool {
        matches!(self, Error::Inconsistent(_) | Error::Certification(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
