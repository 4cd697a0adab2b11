//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid standard dyadic partition: {0}")]
    InvalidSdp(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("operation requires both structure maps to be automorphisms")]
    NotAutomorphism,

    #[error("incompatible prefix relation between {0} and {1}")]
    IncompatiblePrefix(String, String),

    #[error("operation rejects the full Cantor space here")]
    FullSpace,

    #[error("group order {order} exceeds the enumeration bound {bound}")]
    BoundExceeded { order: usize, bound: usize },

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
