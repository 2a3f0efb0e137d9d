//! Exact arithmetic foundation: arbitrary-precision rationals and dense
//! univariate polynomials over them.
//!
//! Everything downstream (sequence evaluation, binomial routes, recurrence
//! construction, the prover) is built on these two types. No floating-point
//! value ever appears; every operation is exact.

mod poly;
mod scalar;

pub use poly::Poly;
pub use scalar::Scalar;

/// Errors raised by polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// Division left a nonzero remainder. Callers rely on exact divisibility,
    /// so this signals a misuse or an upstream bug, never a tolerable input.
    InexactDivision,
    /// The divisor was the zero polynomial.
    DivisionByZero,
}

impl std::fmt::Display for ArithError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ArithError::InexactDivision => write!(f, "polynomial division left a nonzero remainder"),
            ArithError::DivisionByZero => write!(f, "division by the zero polynomial"),
        }
    }
}

impl std::error::Error for ArithError {}
