use thiserror::Error;

use crate::graph::NamedGraph;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph order {0} is outside the supported range 1..=64")]
    UnsupportedOrder(usize),

    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid adjacency rows: {0}")]
    InvalidRows(String),

    #[error("{kind} needs at least {min} vertices, got {n}")]
    OrderTooSmall {
        kind: NamedGraph,
        n: usize,
        min: usize,
    },

    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("Hamiltonicity oracle refuses order {n}, cap is {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("exhaustive labeled enumeration supports 1 <= n <= 8, got {0}")]
    EnumerationOrder(usize),

    #[error("invalid shard {index} of {total}")]
    InvalidShard { index: usize, total: usize },

    #[error("{0}")]
    Config(String),

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,

    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },

    #[error("expected {expected} bytes after the size prefix, found {found}")]
    InvalidLength { expected: usize, found: usize },

    #[error("nonzero padding bits in the last byte")]
    NonZeroPadding,

    #[error("{0} vertices exceeds the 64-vertex limit")]
    TooManyVertices(usize),

    #[error("graphs with zero vertices are not supported")]
    ZeroVertices,

    #[error("truncated size prefix")]
    TruncatedSize,
}

pub type Result<T> = std::result::Result<T, Error>;
