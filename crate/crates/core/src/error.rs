use thiserror::Error;

/// Errors raised by graph construction, enumeration, spectral analysis and
/// report generation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("vertex {vertex} out of range (vertex count {count})")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("half-edge {0} out of range")]
    HalfEdgeOutOfRange(usize),
    #[error("loop at vertex {0} but loops are not allowed")]
    IllegalLoop(usize),
    #[error("parallel edge between {0} and {1} but multi-edges are not allowed")]
    IllegalMultiEdge(usize, usize),
    #[error("inconsistent twin pairing at half-edge {0}")]
    InvalidTwin(usize),
    #[error("graph is not simple")]
    NotSimple,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),

    #[error("subtree is empty")]
    EmptySubtree,
    #[error("subtree is not connected")]
    DisconnectedSubtree,
    #[error("invalid cover vertex: {0}")]
    InvalidCoverVertex(String),
    #[error("invalid geodesic: {0}")]
    InvalidGeodesic(String),
    #[error("average over an empty set")]
    EmptySet,
    #[error("field support does not match the averaged elements")]
    SupportMismatch,
    #[error("field has {found} values, expected {expected}")]
    FieldLength { expected: usize, found: usize },
    #[error("field value at {0} is not finite")]
    NonFiniteValue(usize),

    #[error("graph is not regular")]
    NotRegular,
    #[error("unsupported degree structure: {0}")]
    UnsupportedDegreeStructure(String),
    #[error("eigensolver did not converge after {0} sweeps")]
    ConvergenceFailure(usize),
    #[error("eigenvalue -1 belongs to a bipartite graph")]
    BipartiteEigenvalue,
    #[error("eigenvalue {0} outside the admissible range")]
    EigenvalueOutOfRange(f64),
    #[error("eigenvalue {0} lies inside the forbidden semiregular gap")]
    ForbiddenGapEigenvalue(f64),
    #[error("graph classification does not match the selected theorem: {0}")]
    ClassificationMismatch(String),
    #[error("field is constant: only the trivial eigenvalue is active")]
    OnlyConstantSpectrum,

    #[error("enumeration of {needed} elements exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
