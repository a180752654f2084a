use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid binary word {0:?}: only '0' and '1' are allowed")]
    InvalidWord(String),

    #[error("binary words must be non-empty")]
    EmptyWord,

    #[error("invalid partition {0:?}")]
    InvalidPartition(String),

    #[error("partition {partition} does not fit in a {rows}x{cols} rectangle")]
    PartitionTooLarge {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("word length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("words {0} and {1} differ in their numbers of zeros")]
    TypeMismatch(String, String),

    #[error("edge ({row},{col},{dir}) lies outside the grid of size {n}")]
    EdgeOutsideGrid {
        n: usize,
        row: usize,
        col: usize,
        dir: char,
    },

    #[error("duplicate edge ({row},{col},{dir})")]
    DuplicateEdge { row: usize, col: usize, dir: char },

    #[error("grid size must be at least 1")]
    ZeroSize,

    #[error("malformed document: {0}")]
    Malformed(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{lower} is not a horizontal-strip predecessor of the left boundary {upper}")]
    NotHorizontalPredecessor { lower: String, upper: String },

    #[error("{lower} is not a vertical-strip predecessor of the right boundary {upper}")]
    NotVerticalPredecessor { lower: String, upper: String },

    #[error("size {size} exceeds the configured cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("theorem check failed: {0}")]
    Defect(String),

    #[error("count table is missing data for size {0}")]
    IncompleteTable(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
