use thiserror::Error;

use crate::expr::ExprError;

/// Errors raised by the differintegration routines and their input checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order must be finite, got {0}")]
    NonFiniteOrder(f64),

    #[error("order {0} puts gamma(2 - alpha) at a pole; Riemann-Liouville weights are undefined")]
    OrderPole(f64),

    #[error("domain endpoints must be finite, got [{a}, {b}]")]
    NonFiniteDomain { a: f64, b: f64 },

    #[error("empty or inverted domain [{a}, {b}]: need b > a")]
    InvalidDomain { a: f64, b: f64 },

    #[error("point count must be an integer, got {0}")]
    NonIntegerPoints(f64),

    #[error("at least 2 grid points are required, got {0}")]
    TooFewPoints(f64),

    #[error("gamma function has a pole at {0}")]
    GammaPole(f64),

    #[error("gamma({0}) overflows double precision")]
    GammaOverflow(f64),

    #[error("expected {expected} samples, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("non-finite sample {value} at x = {x} (index {index})")]
    NonFiniteSample { index: usize, x: f64, value: f64 },

    #[error("transform length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("cannot convolve an empty sequence")]
    EmptyInput,

    #[error("result is not finite at x = {x} (index {index})")]
    NonFiniteResult { index: usize, x: f64 },

    #[error(transparent)]
    Expr(#[from] ExprError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
