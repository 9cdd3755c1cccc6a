use thiserror::Error;

/// Errors raised by the library. Validation problems in a mapping-class
/// description are reported as data (see [`crate::surface::ValidationReport`]);
/// the variants here are precondition failures of individual operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be a positive integer, got 0")]
    ZeroArgument,
    #[error("series constant term must be {expected}, got {found}")]
    ConstantTerm {
        expected: &'static str,
        found: String,
    },
    #[error("denominator vanishes at z = 0")]
    SingularAtZero,
    #[error("matrix is not square ({rows} rows, row {row} has {len} entries)")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("matrix must be {expected}, got {rows}x{cols}")]
    Shape {
        expected: String,
        rows: usize,
        cols: usize,
    },
    #[error("empty matrix")]
    EmptyMatrix,
    #[error("map is not Anosov: |trace| = {trace} <= 2")]
    NotAnosov { trace: String },
    #[error("matrix determinant is {det}, expected {expected}")]
    Determinant { det: String, expected: &'static str },
    #[error("eigenvalues are complex (discriminant {discriminant} < 0)")]
    ComplexEigenvalues { discriminant: String },
    #[error(
        "iterate {n} is a multiple of the period {period}; the fixed set is the whole surface"
    )]
    IdentityIterate { n: u64, period: u64 },
    #[error("homology action: {0}")]
    InvalidAction(String),
    #[error("sequence has {available} terms, {needed} needed")]
    SequenceTooShort { needed: usize, available: usize },
    #[error("empty window ({lo}, {hi})")]
    EmptyWindow { lo: u64, hi: u64 },
    #[error("{variant} descriptions cannot be iterated automatically; supply per-iterate data")]
    NotIterable { variant: &'static str },
    #[error("{0}")]
    UnsupportedVariant(String),
    #[error("fixed component {component}, boundary {boundary}: pseudo-Anosov component {target} is not declared")]
    UnmatchedAdjacency {
        component: usize,
        boundary: usize,
        target: usize,
    },
    #[error("invalid description: {0}")]
    Invalid(String),
    #[error("invalid description: {0}")]
    Validation(crate::surface::ValidationReport),
    #[error("order {order} is too small, at least {min} is needed")]
    OrderTooSmall { order: usize, min: usize },
    #[error("{field}: {message}")]
    Parse { field: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
