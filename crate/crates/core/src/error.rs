//! Error type shared by the fallible operations of this crate.

use thiserror::Error;

/// Errors returned by constructors and fallible numerical routines.
#[derive(Debug, Error)]
pub enum CoreError {
    /// A parameter is outside its documented domain.
    #[error("invalid parameter {name}: {value} (expected {expected})")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    /// Two arrays that must have equal lengths do not.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// A quantity that must be strictly positive is not.
    #[error("non-positive value in {context}: {value}")]
    NonPositive { context: &'static str, value: f64 },

    /// The solver state became NaN or infinite during time stepping.
    #[error("solver state became non-finite at t = {time} (step {step})")]
    NonFiniteState { time: f64, step: usize },
}
