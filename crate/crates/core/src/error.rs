use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} is already deleted")]
    VertexDeleted(usize),

    #[error("vertex {0} is not deletable in the current view")]
    NotDeletable(usize),

    #[error("nothing to restore")]
    NothingToRestore,

    #[error("order k = {k} out of range 1..={n}")]
    OrderOutOfRange { k: usize, n: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("oracle refuses n = {n} (limit {limit})")]
    OracleTooLarge { n: usize, limit: usize },

    /// More than one articulation point became deletable after a single
    /// deletion. The top-down enumerator relies on this never happening.
    #[error("{added} vertices became deletable after deleting {deleted}")]
    DeletableBound { deleted: usize, added: usize },

    #[error("identity {identity} failed: expected {expected}, got {actual}")]
    IdentityFailed { identity: &'static str, expected: u64, actual: u64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
