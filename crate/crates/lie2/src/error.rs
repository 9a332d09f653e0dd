//! Crate-wide error type.
//!
//! Errors split into two broad classes, which the CLI maps to distinct exit
//! codes:
//! - *input errors* (malformed files, dimension mismatches, out-of-range
//!   indices): the data could not even be interpreted;
//! - *mathematical failures* (a precondition that is a theorem hypothesis
//!   does not hold, a linear system is inconsistent, a complex does not
//!   square to zero): the data was understood but the requested construction
//!   does not exist for it.

use thiserror::Error;

/// All errors produced by the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input data (schema violations, bad
    /// dimensions, out-of-range indices, unparsable numbers).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A square matrix that needed to be inverted is singular.
    #[error("matrix is singular: {0}")]
    SingularMatrix(String),

    /// A cochain degree outside the range supported by the complex context.
    #[error("degree {degree} exceeds the configured maximum degree {max_degree}; \
             raise the maximum degree of the cochain complex")]
    DegreeOutOfRange { degree: i64, max_degree: i64 },

    /// The coboundary operator failed to square to zero, or an image failed
    /// to lie inside a kernel.  For a genuine algebra and representation this
    /// cannot happen; it signals that the supplied representation data does
    /// not actually satisfy the representation equations.
    #[error("coboundary does not square to zero at degree {degree}: {detail}")]
    BrokenComplex { degree: i64, detail: String },

    /// The ambient algebra and splitting do not present an abelian extension.
    #[error("not an abelian extension: {0}")]
    NotAnExtension(String),

    /// A polynomial with nonzero constant term was passed where only
    /// polynomials vanishing at zero are admissible.
    #[error("polynomial has a nonzero constant term; only polynomials with zero \
             constant term send compatible operators to compatible operators")]
    ConstantTerm,

    /// A mathematical precondition failed (the input was well-formed but the
    /// requested construction requires a property the data lacks).
    #[error("precondition failed: {0}")]
    FailedCheck(String),

    /// Filesystem error while reading or writing a JSON file.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// JSON (de)serialization error.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Whether this error is an *input* error (CLI exit code 2) rather than
    /// a mathematical failure (CLI exit code 1).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidInput(_) | Error::Io(_) | Error::Json(_)
        )
    }
}
