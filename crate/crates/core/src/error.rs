use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("a monomial needs at least one variable")]
    NoVariables,

    #[error("the unit ideal has an empty quotient; {0} is undefined")]
    UnitIdeal(&'static str),

    #[error("{0} is not applicable to the zero or unit ideal")]
    NotApplicable(&'static str),

    #[error("ideal is not stable; use the brute-force Betti oracle instead")]
    NotStable,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed Hilbert function spec: {0}")]
    MalformedSpec(String),

    #[error("not an O-sequence: H({next}) = {value} exceeds the Macaulay bound {bound} at degree {degree}")]
    NotOSequence {
        degree: usize,
        next: usize,
        value: u64,
        bound: String,
    },

    #[error("multidegree box of size {size} exceeds the cap of {cap}")]
    BoxTooLarge { size: u128, cap: u128 },

    #[error("{count} generators exceed the inclusion-exclusion cap of {cap}")]
    TooManyGenerators { count: usize, cap: usize },

    #[error("{count} variables exceed the supported maximum of {max}")]
    TooManyVariables { count: usize, max: usize },

    #[error("parameters out of range (r = {r}, s = {s}): {reason}")]
    ParameterRange { r: u32, s: u32, reason: &'static str },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for errors that signal a mathematically invalid request
    /// (as opposed to malformed input or a failed self-check).
    pub fn is_domain_error(&self) -> bool {
        matches!(
            self,
            Error::UnitIdeal(_)
                | Error::NotApplicable(_)
                | Error::NotStable
                | Error::NotOSequence { .. }
                | Error::BoxTooLarge { .. }
                | Error::TooManyGenerators { .. }
                | Error::TooManyVariables { .. }
        )
    }

    pub fn is_verification_error(&self) -> bool {
        matches!(self, Error::Verification(_) | Error::Inconsistent(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
