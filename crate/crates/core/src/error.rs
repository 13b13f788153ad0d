//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: operands live in different polynomial rings")]
    RingMismatch,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("input file error at line {line}: {msg}")]
    InputFile { line: usize, msg: String },

    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,

    #[error("substitution map incomplete: expected {expected} images, got {got}")]
    IncompleteMap { expected: usize, got: usize },

    #[error("degree cap {cap} exceeded during basis computation")]
    CapExceeded { cap: u64 },

    #[error("matrix shape error: {0}")]
    Shape(String),

    #[error("invalid collection: {0}")]
    Collection(String),

    #[error("degenerate pair: augmented determinant vanishes identically on X")]
    DegeneratePair,

    #[error("variety is not presented as a complete intersection ({got} generators, expected {expected})")]
    NotCompleteIntersection { expected: usize, got: usize },

    #[error("special locus is not isolated: dimension {dim} off the singular locus")]
    NotIsolated { dim: i64 },

    #[error("infinite colength in {0}")]
    InfiniteColength(String),

    #[error("normalization map required for this route but not provided")]
    MissingNormalization,

    #[error("route disagreement: colength route gives {colength_route}, normalization route gives {normalization_route}")]
    RouteDisagreement {
        colength_route: i64,
        normalization_route: i64,
    },

    #[error("truncation oracle did not stabilize below cap {cap}")]
    NotStabilized { cap: u32 },

    #[error("oracle seeds disagree: {0} vs {1}")]
    OracleDisagreement(u64, u64),

    #[error("retry budget exhausted while drawing generic data: {0}")]
    RetryExhausted(String),
}

pub type Result<T> = std::result::Result<T, Error>;
