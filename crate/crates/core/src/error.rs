//! Crate-wide error type.

use thiserror::Error;

use crate::symmetric_quandle::ValidationReport;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("generator index {index} exceeds rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("invalid word encoding: {0}")]
    BadWordEncoding(String),

    #[error("braid degree must be at least 1")]
    InvalidDegree,

    #[error("braid letter index {index} out of range 1..={max} for degree {degree}")]
    BraidLetterOutOfRange {
        index: usize,
        max: usize,
        degree: usize,
    },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation of 1..={degree}")]
    NotAPermutation { degree: usize },

    #[error("index {j} out of range for a degree-{m2} wicket generator")]
    HildenIndexOutOfRange { j: usize, m2: usize },

    #[error("degree {degree} is odd; this operation requires an even degree")]
    OddDegree { degree: usize },

    #[error("band index {band} out of range 1..={max} for degree {degree}")]
    BandOutOfRange {
        band: usize,
        max: usize,
        degree: usize,
    },

    #[error("slide position {j} out of range (system has {entries} entries)")]
    SlidePositionOutOfRange { j: usize, entries: usize },

    #[error("family parameters out of range: need m >= 2 and p >= 1, got m = {m}, p = {p}")]
    BadFamilyParameters { m: usize, p: usize },

    #[error("component count is only defined here for genuine systems (trivial boundary braid)")]
    NotGenuine,

    #[error("malformed quandle tables: {0}")]
    MalformedTables(String),

    #[error("quandle axioms violated:\n{0}")]
    InvalidQuandle(ValidationReport),

    #[error("dihedral quandle order must be at least 1")]
    BadDihedralOrder,

    #[error("good-involution search supports size <= {max}, got {size}")]
    QuandleTooLarge { size: usize, max: usize },

    #[error("assignment of length {len} does not cover generator x{index}")]
    AssignmentTooShort { index: usize, len: usize },

    #[error("quandle element {value} out of range for a quandle of size {size}")]
    ElementOutOfRange { value: usize, size: usize },

    #[error("relator index {index} out of range ({count} relators)")]
    RelatorOutOfRange { index: usize, count: usize },

    #[error("generator x{generator} is not eliminable: {reason}")]
    NotEliminable { generator: usize, reason: String },

    #[error("search space of {required} assignments exceeds the ceiling of {ceiling}")]
    CeilingExceeded { required: u128, ceiling: u64 },

    #[error("plat bound needs coloring count >= 1 and quandle order >= 2, got {count} and {order}")]
    BadBoundArguments { count: u64, order: u64 },

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{0}")]
    InvalidInput(String),
}
