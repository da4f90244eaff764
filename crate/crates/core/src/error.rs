//! Crate-wide error type.
//!
//! Every failure carries enough context to name the offending index, since
//! genericity and normalization problems must be reported, never patched.

use thiserror::Error;

use crate::ring::RingTag;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: RingTag, found: RingTag },

    #[error("division by zero")]
    DivisionByZero,

    #[error("zero denominator in rational")]
    ZeroDenominator,

    #[error("cannot parse scalar from {0:?}")]
    ParseScalar(String),

    #[error("coefficient {index} is not central")]
    NonCentralCoefficient { index: usize },

    #[error("degree and leading coefficient are undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("missing bimoment I_({a},{b}): table holds {rows}x{cols}")]
    MissingBimoment {
        a: usize,
        b: usize,
        rows: usize,
        cols: usize,
    },

    #[error("moment sequence too short: need {needed}, got {got}")]
    MomentSequenceTooShort { needed: usize, got: usize },

    #[error("{op} is not supported over the {ring} ring")]
    UnsupportedRing { op: &'static str, ring: RingTag },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("index ({row},{col}) out of range for {rows}x{cols}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("singular matrix: no nonzero pivot in column {col}")]
    Singular { col: usize },

    #[error("quasideterminant at ({row},{col}) does not exist: struck submatrix is singular")]
    QuasidetUndefined { row: usize, col: usize },

    #[error("truncation mismatch: {left} vs {right}")]
    TruncMismatch { left: usize, right: usize },

    #[error("entry ({row},{col}) violates band certificate [{lo},{hi}]")]
    BandViolation {
        row: usize,
        col: usize,
        lo: String,
        hi: String,
    },

    #[error("genericity violation at n = {n}: required quasideterminant does not exist or is not invertible")]
    GenericityViolation { n: usize },

    #[error("genericity violation: still failing after {attempts} random seeds (last failure at n = {last})")]
    GenericityRetriesExhausted { attempts: usize, last: usize },

    #[error("degenerate normalization: {kind}_{index} = 0")]
    DegenerateNormalization { kind: &'static str, index: usize },

    #[error("system is not biorthonormal; {0} requires diagonal pairings equal to 1")]
    NotBiorthonormal(&'static str),

    #[error("bimoment table too small: need at least {needed_rows}x{needed_cols}, got {rows}x{cols}")]
    InsufficientTable {
        needed_rows: usize,
        needed_cols: usize,
        rows: usize,
        cols: usize,
    },

    #[error("seed rows insufficient: need {needed_rows} rows of width {needed_cols}")]
    InsufficientSeed {
        needed_rows: usize,
        needed_cols: usize,
    },

    #[error("sequence {name} too short: need {needed}, got {got}")]
    SequenceTooShort {
        name: &'static str,
        needed: usize,
        got: usize,
    },

    #[error("polynomial {which}_{n} must have degree {n}, got degree {got:?}")]
    DegreeMismatch {
        which: &'static str,
        n: usize,
        got: Option<usize>,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}

impl Error {
    /// True for failures of a mathematical hypothesis (genericity,
    /// degeneracy, singularity) as opposed to malformed input.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::DivisionByZero
                | Error::Singular { .. }
                | Error::QuasidetUndefined { .. }
                | Error::GenericityViolation { .. }
                | Error::GenericityRetriesExhausted { .. }
                | Error::DegenerateNormalization { .. }
                | Error::NotBiorthonormal(..)
                | Error::InternalInconsistency(..)
                | Error::BandViolation { .. }
        )
    }
}
