use alloc::string::String;
use core::fmt;

/// Errors raised by the exact pipelines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Square root of a negative number was requested.
    NegativeSqrt,
    /// Vectors, subspaces or bodies live in different ambient spaces.
    DimensionMismatch { expected: usize, found: usize },
    /// The operation needs a full-dimensional (or nonzero) input.
    Degenerate(&'static str),
    /// Input violates a documented precondition.
    InvalidInput(String),
    /// An element refers to a subspace outside the arrangement's lattice.
    ArrangementMismatch,
    /// Grading of an element does not match what the operation expects.
    DegreeMismatch { expected: usize, found: usize },
    /// A measure that must be centered has a nonzero centroid.
    NotCentered,
    /// A degree-one element is not in the open cone `K(E)`.
    NotInCone,
    /// A facet normal is not on any line of the arrangement.
    OffArrangement,
    /// A polytope that must be centrally symmetric is not.
    NotSymmetric,
    /// Matrix must be symmetric.
    NotSymmetricMatrix,
    /// An oracle was asked for an instance beyond its size guard.
    SizeGuard(&'static str),
    /// Interval refinement ran out of rounds (signals a bug).
    PrecisionExhausted,
    /// Text could not be parsed.
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeSqrt => write!(f, "square root of a negative rational"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::Degenerate(what) => write!(f, "degenerate input: {what}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::ArrangementMismatch => {
                write!(f, "element is not supported on the arrangement's lattice")
            }
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::NotCentered => write!(f, "measure is not centered"),
            Error::NotInCone => write!(f, "element is not in the positive cone K(E)"),
            Error::OffArrangement => write!(f, "facet normal is not on a line of the arrangement"),
            Error::NotSymmetric => write!(f, "polytope is not centrally symmetric"),
            Error::NotSymmetricMatrix => write!(f, "matrix is not symmetric"),
            Error::SizeGuard(what) => write!(f, "size guard exceeded: {what}"),
            Error::PrecisionExhausted => write!(f, "interval refinement exhausted its rounds"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
