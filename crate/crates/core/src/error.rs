use thiserror::Error;

/// Errors raised while reading a DIMACS-like graph description.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `p edge <n> <m>` header")]
    MissingHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("malformed line `{0}`")]
    Malformed(String),
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("header declares {declared} edges but body has {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
}

/// A coloring that cannot be checked at all, as opposed to one that is checkable but fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("coloring has {found} entries, graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} is uncolored")]
    Uncolored { vertex: usize },
    #[error("vertex {vertex} has color {color}, outside 0..{c}")]
    ColorOutOfRange { vertex: usize, color: usize, c: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid obstacle: {0}")]
    InvalidObstacle(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The instance was expected to be reduced but still contains an obstacle
    /// spending fewer colors than are available.
    #[error("instance is not reduced: found an obstacle with {i} centers for c = {c}")]
    NotReduced { i: usize, c: usize },
    #[error("exact search budget exceeded")]
    BudgetExceeded,
    /// A constructive step reached a branch that its correctness argument rules out.
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
