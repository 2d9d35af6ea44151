use thiserror::Error;

/// Errors produced by parsing, recognition, and the exact oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("not a split graph (degree sequence test failed)")]
    NotSplit,

    #[error("not a proper interval graph (no umbrella ordering exists)")]
    NotProperInterval,

    #[error("not a cograph: vertices {0:?} induce a path on four vertices")]
    NotCograph([u32; 4]),

    #[error("not triangle-free: vertices {0:?} form a triangle")]
    NotTriangleFree([u32; 3]),

    #[error("vertex {0} has degree less than 2")]
    DegreeTooSmall(u32),

    #[error("graph has no edges")]
    Edgeless,

    #[error("invalid split partition: {0}")]
    InvalidPartition(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("{what} cap exceeded: needed {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: usize,
        cap: usize,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
