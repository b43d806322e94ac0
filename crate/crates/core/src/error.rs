//! Error type shared by the whole crate.

use std::error::Error;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrameError {
    /// Operand shapes do not allow the operation (e.g. adjoining frames that
    /// live in different dimensions).
    DimensionMismatch,
    /// A square matrix was required.
    NotSquare,
    /// Entry data length does not match `rows * cols`, or rows are ragged.
    BadShape,
    /// A row/column index was out of range.
    IndexOutOfRange,
    /// A nonempty row selection was required.
    EmptyRowSelection,
    /// The matrix does not have full row rank where a frame was required.
    NotAFrame,
    /// A parameter that must be nonzero was zero.
    ZeroParameter,
    /// Fewer vectors than dimensions were requested.
    CountBelowDimension { dim: usize, count: usize },
    /// The requested Hadamard order is outside the implemented constructions
    /// (Sylvester doubling over {1, 2} and Paley I bases). This is distinct
    /// from a proof that no such matrix exists.
    UnsupportedHadamardOrder(u64),
    /// No (dim+1)-element equal-norm tight integer frame exists in this
    /// dimension: dim+1 is not a sum of 1, 2, 4 or 8 odd squares.
    SimplexInfeasible(u64),
    /// The coin representation `g*m = p*a + q*b` has no nonnegative solution.
    CoinInfeasible { a: u64, b: u64, m: u64 },
    /// Inputs to a norm-sensitive adjunction have different column norms.
    NormMismatch,
    /// An operation required tight inputs.
    NotTight,
    /// The two integer lists do not have equal square sums.
    SquareSumMismatch,
    /// The denominator budget was exhausted before a qualifying rational
    /// point was found.
    BudgetExhausted,
    /// A parameter is outside the supported range.
    InvalidParameter(&'static str),
    /// The request exceeds the fixed-width capacity of this routine.
    TooLarge(&'static str),
}

impl fmt::Display for FrameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameError::DimensionMismatch => write!(f, "operand dimensions do not match"),
            FrameError::NotSquare => write!(f, "matrix is not square"),
            FrameError::BadShape => write!(f, "entry data does not match the stated shape"),
            FrameError::IndexOutOfRange => write!(f, "row or column index out of range"),
            FrameError::EmptyRowSelection => write!(f, "row selection must be nonempty"),
            FrameError::NotAFrame => write!(f, "matrix does not have full row rank"),
            FrameError::ZeroParameter => write!(f, "parameter must be nonzero"),
            FrameError::CountBelowDimension { dim, count } => {
                write!(f, "need at least {dim} vectors in dimension {dim}, got {count}")
            }
            FrameError::UnsupportedHadamardOrder(n) => write!(
                f,
                "Hadamard order {n} is not reachable by the implemented constructions \
                 (Sylvester doubling of order 1, 2 and Paley I bases)"
            ),
            FrameError::SimplexInfeasible(m) => write!(
                f,
                "no {}-element equal-norm tight integer frame exists in dimension {m}: \
                 {} is not a sum of 1, 2, 4 or 8 odd squares",
                m + 1,
                m + 1
            ),
            FrameError::CoinInfeasible { a, b, m } => {
                write!(f, "{m}*gcd({a},{b}) has no representation p*{a} + q*{b} with p, q >= 0")
            }
            FrameError::NormMismatch => {
                write!(f, "frames do not have matching column norms")
            }
            FrameError::NotTight => write!(f, "frame is not tight"),
            FrameError::SquareSumMismatch => {
                write!(f, "integer lists do not have equal square sums")
            }
            FrameError::BudgetExhausted => {
                write!(f, "denominator budget exhausted before a qualifying point was found")
            }
            FrameError::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            FrameError::TooLarge(what) => write!(f, "request too large: {what}"),
        }
    }
}

impl Error for FrameError {}

pub type Result<T> = std::result::Result<T, FrameError>;
