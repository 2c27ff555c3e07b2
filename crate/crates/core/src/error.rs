use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("{edges} edges but {demands} demands")]
    DemandCount { edges: usize, demands: usize },
    #[error("edge {edge} contains vertex {vertex} more than once")]
    RepeatedVertex { edge: usize, vertex: usize },
    #[error("edge {edge} contains vertex {vertex}, but there are only {num_vertices} vertices")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        num_vertices: usize,
    },
    #[error("edge {edge} has demand 0")]
    ZeroDemand { edge: usize },
    #[error("vertex {vertex} out of range (n = {num_vertices})")]
    UnknownVertex { vertex: usize, num_vertices: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `p mhs <n> <m> [k]` header")]
    MissingHeader,
    #[error("malformed header, expected `p mhs <n> <m> [k]`")]
    MalformedHeader,
    #[error("second header line")]
    DuplicateHeader,
    #[error("edge line without a demand")]
    MissingDemand,
    #[error("invalid number `{0}`")]
    InvalidNumber(String),
    #[error("demand must be a positive integer, got {0}")]
    InvalidDemand(i64),
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} listed twice in one edge")]
    RepeatedVertex(usize),
    #[error("more than the {declared} declared edges")]
    TooManyEdges { declared: usize },
    #[error("header declares {declared} edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("unrecognised line type `{0}`")]
    UnknownLine(String),
}

/// Errors from rule predicates that address a specific item.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("edge {0} does not exist")]
    UnknownEdge(usize),
    #[error("edge {0} has been deleted")]
    DeadEdge(usize),
    #[error("vertex {0} does not exist")]
    UnknownVertex(usize),
    #[error("vertex {0} has been deleted")]
    DeadVertex(usize),
    #[error("an edge cannot be compared with itself")]
    SameEdge,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("node {node} out of range ({num_nodes} nodes)")]
    UnknownNode { node: usize, num_nodes: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("search exceeded the node limit of {0}")]
    NodeLimit(u64),
    #[error("vertex {0} out of range")]
    UnknownVertex(usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("inclusion probability must lie in (0, 1], got {0}")]
    Probability(f64),
    #[error("alpha must be at least 1")]
    Alpha,
    #[error("cannot build {0} non-empty edges without vertices")]
    NoVertices(usize),
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("row {row}, column {column}: `{value}` is not a number")]
    NonNumeric {
        row: usize,
        column: usize,
        value: String,
    },
    #[error("row {row} has {found} cells, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("alpha must be at least 1")]
    Alpha,
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
