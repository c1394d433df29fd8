//! Error type shared by all solver operations.

use std::fmt;

/// Errors reported by validation, search, and certificate operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An instance coefficient was zero or negative.
    NonPositiveCoefficient { side: Side, index: usize },
    /// An instance side had no coefficients at all.
    EmptySide { side: Side },
    /// A vector had the wrong length for the instance it was used with.
    DimensionMismatch { expected: usize, got: usize },
    /// A generator index was outside `1..=n` x `1..=m`.
    IndexOutOfRange { index: usize, len: usize },
    /// A solution entry was negative.
    NegativeEntry { side: Side, index: usize },
    /// The pair (x, y) does not satisfy the instance equation.
    NotASolution,
    /// The operation requires a nonzero solution.
    ZeroSolution,
    /// The operation requires a minimal solution.
    NotMinimal,
    /// A pivot was requested on an empty support.
    EmptySupport,
    /// Enumeration exceeded the configured node budget.
    SearchBudgetExceeded { limit: u64 },
    /// An exact internal identity failed; this indicates a bug.
    InvariantViolation(String),
    /// A certificate failed its defining constraints.
    InvalidCertificate(String),
    /// The operation requires gcd(a_i, b_j) = 1 for all pairs.
    NotCoprime { i: usize, j: usize },
}

/// Which side of the equation a validation error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
    X,
    Y,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::A => write!(f, "a"),
            Side::B => write!(f, "b"),
            Side::X => write!(f, "x"),
            Side::Y => write!(f, "y"),
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveCoefficient { side, index } => {
                write!(f, "coefficient {}[{}] must be >= 1", side, index + 1)
            }
            Error::EmptySide { side } => write!(f, "coefficient vector {side} is empty"),
            Error::DimensionMismatch { expected, got } => {
                write!(
                    f,
                    "dimension mismatch: expected length {expected}, got {got}"
                )
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {} out of range 1..={}", index + 1, len)
            }
            Error::NegativeEntry { side, index } => {
                write!(f, "entry {}[{}] must be >= 0", side, index + 1)
            }
            Error::NotASolution => write!(f, "(x, y) does not satisfy a.x = b.y"),
            Error::ZeroSolution => write!(f, "the zero solution is not allowed here"),
            Error::NotMinimal => write!(f, "the solution is not minimal"),
            Error::EmptySupport => write!(f, "pivot selection on empty support"),
            Error::SearchBudgetExceeded { limit } => {
                write!(f, "search budget of {limit} nodes exceeded")
            }
            Error::InvariantViolation(msg) => write!(f, "invariant violation: {msg}"),
            Error::InvalidCertificate(msg) => write!(f, "invalid certificate: {msg}"),
            Error::NotCoprime { i, j } => {
                write!(f, "gcd(a_{}, b_{}) > 1", i + 1, j + 1)
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
