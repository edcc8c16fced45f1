use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: malformed token `{token}`")]
    MalformedToken { line: usize, token: String },
    #[error("line {line}: duplicate `!vertices` header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: `!vertices` header must precede all edges")]
    LateHeader { line: usize },
    #[error("line {line}: vertex `{token}` is not listed in the `!vertices` header")]
    UnknownVertex { line: usize, token: String },
    #[error("line {line}: vertex `{token}` listed twice in the header")]
    DuplicateVertex { line: usize, token: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertexName(String),
    #[error("hypergraph is not {expected}-uniform (found an edge of size {found})")]
    NotUniform { expected: usize, found: usize },
    #[error("the given set is not a hitting set (edge {edge} is missed)")]
    NotHittingSet { edge: usize },
    #[error("the included and excluded vertex sets overlap")]
    OverlappingSets,
    #[error("operation requires a hypergraph with at least one edge")]
    EmptyHypergraph,
    #[error("the hypergraph contains the empty edge; its transversal rank is undefined")]
    EmptyEdge,
    #[error("vertex universes differ ({left} vs {right} vertices)")]
    UniverseMismatch { left: usize, right: usize },
    #[error("instance has {n} vertices, exceeding the oracle cap of {cap}")]
    OracleCapExceeded { n: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("infeasible instance family: {0}")]
    Infeasible(String),
}
