//! Error type shared by every module of the crate.

use thiserror::Error;

/// Every failure the library can report.
///
/// Variants are split into input errors (malformed or inconsistent data handed
/// in by the caller) and computation errors (well-formed data on which a
/// particular algorithm cannot produce a value). [`Error::is_input_error`]
/// draws that line for the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: expected one of {expected:?}")]
    SyntaxError {
        position: usize,
        expected: Vec<&'static str>,
    },
    #[error("variable x{index} is out of range for {n_vars} variables")]
    VariableOutOfRange { index: usize, n_vars: usize },
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("vertex length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("faces do not match at vertex {vertex}")]
    FaceMismatch { vertex: String },
    #[error("not a permutation of 0..{n}: {perm:?}")]
    BadPermutation { n: usize, perm: Vec<usize> },
    #[error("chi values on the 2-face disagree: {values:?}")]
    ChiMismatch { values: Vec<String> },
    #[error("symbol {symbol} has no degree vector or the wrong arity")]
    UntaggedSymbol { symbol: String },
    #[error("quotient is not zero-dimensional (no pure power of x{variable})")]
    NotZeroDimensional { variable: usize },
    #[error("form {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("wrong arity: expected {expected} variables, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("form {index} is zero")]
    ZeroForm { index: usize },
    #[error("declared degree {declared} of form {index} differs from actual degree {actual}")]
    DegreeMismatch {
        index: usize,
        declared: u32,
        actual: u32,
    },
    #[error("expected {expected} forms, got {got}")]
    FormCount { expected: usize, got: usize },
    #[error("monomial {monomial} has no row assignment")]
    UnassignedMonomial { monomial: String },
    #[error("Macaulay extraneous minor vanishes; try the poisson path")]
    DegenerateMinor,
    #[error("poisson precondition failed: {reason}")]
    PoissonPreconditionFailed { reason: String },
    #[error("crosscheck mismatch: macaulay = {macaulay}, poisson = {poisson}")]
    CrosscheckMismatch { macaulay: String, poisson: String },
    #[error("both resultant paths are degenerate")]
    BothPathsDegenerate,
    #[error("invalid job: {0}")]
    InvalidJob(String),
}

impl Error {
    /// Name of the variant, as written into JSON reports.
    pub fn kind_name(&self) -> &'static str {
        match self {
            Error::SyntaxError { .. } => "SyntaxError",
            Error::VariableOutOfRange { .. } => "VariableOutOfRange",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotSquare { .. } => "NotSquare",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::FaceMismatch { .. } => "FaceMismatch",
            Error::BadPermutation { .. } => "BadPermutation",
            Error::ChiMismatch { .. } => "ChiMismatch",
            Error::UntaggedSymbol { .. } => "UntaggedSymbol",
            Error::NotZeroDimensional { .. } => "NotZeroDimensional",
            Error::NotHomogeneous { .. } => "NotHomogeneous",
            Error::WrongArity { .. } => "WrongArity",
            Error::ZeroForm { .. } => "ZeroForm",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::FormCount { .. } => "FormCount",
            Error::UnassignedMonomial { .. } => "UnassignedMonomial",
            Error::DegenerateMinor => "DegenerateMinor",
            Error::PoissonPreconditionFailed { .. } => "PoissonPreconditionFailed",
            Error::CrosscheckMismatch { .. } => "CrosscheckMismatch",
            Error::BothPathsDegenerate => "BothPathsDegenerate",
            Error::InvalidJob(_) => "InvalidJob",
        }
    }

    /// True when the caller handed in bad data, false when a computation on
    /// valid data could not be carried out.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::SyntaxError { .. }
                | Error::VariableOutOfRange { .. }
                | Error::ArityMismatch { .. }
                | Error::IndexOutOfRange { .. }
                | Error::NotSquare { .. }
                | Error::LengthMismatch { .. }
                | Error::BadPermutation { .. }
                | Error::UntaggedSymbol { .. }
                | Error::NotHomogeneous { .. }
                | Error::WrongArity { .. }
                | Error::ZeroForm { .. }
                | Error::DegreeMismatch { .. }
                | Error::FormCount { .. }
                | Error::InvalidJob(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
