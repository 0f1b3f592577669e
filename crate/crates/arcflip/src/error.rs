use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("vertex set is not a clique: {0}")]
    NotAClique(String),
    #[error("graph has a universal vertex: {0}")]
    UniversalVertex(String),
    #[error("{what} guard exceeded (limit {limit})")]
    GuardExceeded { what: &'static str, limit: u64 },
    #[error("frontier limit exceeded: {total} clique paths exist")]
    LimitExceeded { total: u128 },
    #[error("graph is not interval")]
    NotInterval,
    #[error("malformed witness: {0}")]
    MalformedWitness(String),
    #[error("model does not realize the graph: {0}")]
    ModelMismatch(String),
    #[error("endpoint must be strictly positive (vertex {0})")]
    NonpositiveEndpoint(String),
    #[error("cut point coincides with an arc endpoint at {0}")]
    PointOnEndpoint(String),
    #[error("graph contains an induced four-cycle: {0}")]
    C4Present(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Reads an enumeration-guard override from `ARCFLIP_GUARD`, falling back to `default`.
pub fn guard_limit(default: u64) -> u64 {
    std::env::var("ARCFLIP_GUARD")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}
