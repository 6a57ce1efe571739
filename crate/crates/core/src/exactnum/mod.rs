//! Exact scalars: rationals and the Cayley–Dickson tower built on them.

mod cayley_dickson;
mod rational;

pub use cayley_dickson::{cd_mul_recursive, CdElement, MAX_LEVEL};
pub(crate) use cayley_dickson::scaled_symbol;
pub use rational::{FieldOp, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot invert zero")]
    ZeroInverse,
    #[error("invalid rational literal `{0}`")]
    ParseRational(String),
    #[error("Cayley-Dickson level mismatch: {left} vs {right}")]
    LevelMismatch { left: u8, right: u8 },
    #[error("unsupported Cayley-Dickson level {0} (maximum is 3)")]
    InvalidLevel(u8),
    #[error("expected {expected} coordinates, got {got}")]
    CoordinateCount { expected: usize, got: usize },
}
