use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("bad vertex ids: {0}")]
    BadVertexIds(String),

    #[error("bad Prüfer sequence: {0}")]
    BadSequence(String),

    #[error("vertex {vertex} out of range for a tree on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("instance with n = {n} exceeds the limit of {cap}; {hint}")]
    InstanceTooLarge {
        n: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("degenerate instance: {0}")]
    DegenerateInstance(String),

    #[error("set is not a global defensive alliance: {0}")]
    NotGlobalDefensive(String),

    #[error("invalid corpus spec: {0}")]
    InvalidSpec(String),

    #[error("instance {instance}: {source}")]
    Instance {
        instance: String,
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
