use thiserror::Error;

/// Errors raised by graph construction and the classification procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: duplicate vertex id `{id}`")]
    DuplicateVertex { line: usize, id: String },

    #[error("line {line}: duplicate edge id `{id}`")]
    DuplicateEdge { line: usize, id: String },

    #[error("line {line}: edge `{edge}` references undeclared vertex `{vertex}`")]
    UndeclaredVertex {
        line: usize,
        edge: String,
        vertex: String,
    },

    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("invalid JSON graph: {0}")]
    Json(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex set belongs to a graph with {expected} vertices, got universe of {found}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("the graph has no vertices")]
    EmptyGraph,

    #[error("the graph is not connected; classify its components separately")]
    Disconnected,

    #[error("lower set is not contained in the upper set")]
    NotNested,

    #[error("vertex set is not hereditary")]
    NotHereditary,

    #[error("vertex set is not hereditary saturated")]
    NotHereditarySaturated,

    #[error("invalid covering window [{lo}, {hi}]")]
    InvalidWindow { lo: i64, hi: i64 },

    #[error("{0} is neither 0 nor a prime")]
    InvalidCharacteristic(u64),

    #[error("graph has {vertices} vertices, above the exhaustive lattice bound {bound}")]
    LatticeBound { vertices: usize, bound: usize },

    #[error("quotient is not simple: it has a proper nonempty hereditary saturated subset")]
    QuotientNotSimple,

    #[error("balloon query needs a nonempty base set")]
    EmptyBase,

    #[error("balloon vertex `{0}` lies in the base set")]
    VertexInBase(String),

    #[error("weight vector has {found} entries, graph has {expected} vertices")]
    WeightLength { expected: usize, found: usize },

    #[error("malformed monoid element `{0}`")]
    MonoidSyntax(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
