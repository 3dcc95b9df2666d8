use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size out of range for {kind}: {detail}")]
    SizeOutOfRange { kind: &'static str, detail: String },

    #[error("empty graph: {0}")]
    EmptyGraph(&'static str),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("edge ({}, {}) is not an edge of the host graph", .0.0, .0.1)]
    NotAnEdge(Edge),

    #[error("coloring domain does not match host graph: {0}")]
    DomainMismatch(String),

    #[error("color 0 on edge ({}, {}); colors are 1-based", .0.0, .0.1)]
    ZeroColor(Edge),

    #[error("improper coloring: edges ({}, {}) and ({}, {}) share color {color}", .first.0, .first.1, .second.0, .second.1)]
    Improper { first: Edge, second: Edge, color: u32 },

    #[error("not a matching: edges ({}, {}) and ({}, {}) share a vertex", .0.0, .0.1, .1.0, .1.1)]
    NotAMatching(Edge, Edge),

    #[error("matching is not perfect")]
    NotPerfect,

    #[error("color {0} is already used by the coloring")]
    ColorInUse(u32),

    #[error("color range violation: {0}")]
    ColorRange(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
