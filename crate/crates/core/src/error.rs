use thiserror::Error;

/// Errors raised across the library.
///
/// Variants split into two families: arithmetic/domain errors that a caller
/// can trigger with bad input, and `StructureViolation` / `NonIntegralExponent`,
/// which mean an assembled object failed an identity it must satisfy.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,

    #[error("evaluation at a pole (x = {0})")]
    PoleEvaluation(String),

    #[error("pole of order at least two at x = {0}")]
    HigherOrderPole(String),

    #[error("function has a pole at the origin; no power-series expansion")]
    PoleAtOrigin,

    #[error("Weil bound violated: {0}")]
    WeilViolation(String),

    #[error("trace a_{index} = {trace} violates a^2 <= 4q for q = {q}")]
    TraceOutOfRange { index: usize, trace: i64, q: u64 },

    #[error("invalid curve data: {0}")]
    InvalidCurve(String),

    #[error("structure violation: {0}")]
    StructureViolation(String),

    #[error(
        "non-integral q-exponent {exponent} for composition {composition:?} (n = {n}, d = {d})"
    )]
    NonIntegralExponent {
        composition: Vec<usize>,
        exponent: String,
        n: usize,
        d: i64,
    },

    #[error("root finder did not converge after {iterations} iterations at {precision_bits} bits (max residual {max_residual:e})")]
    NonConvergence {
        iterations: usize,
        precision_bits: usize,
        max_residual: f64,
    },

    #[error("domain violation: {0}")]
    DomainViolation(String),

    #[error("sample lies on a pole")]
    SampleAtPole,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("catalog entry errors: {}", .0.join("; "))]
    Entries(Vec<String>),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
