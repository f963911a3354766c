use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("digraph is not strongly connected")]
    NotStronglyConnected,
    #[error("vertex {0} is not a cut vertex")]
    NotACutVertex(usize),
    #[error("edge ({0}, {1}) is not butterfly contractible")]
    NotButterflyContractible(usize, usize),
    #[error("enumeration cap of {cap} exceeded after {seen} items")]
    EnumerationCapExceeded { cap: usize, seen: usize },
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("input digraph is even: {0}")]
    EvenInputDetected(String),
    #[error("strongly 2-connected digraph on {0} vertices has no vertex of out-degree two")]
    NoOutDegreeTwoVertex(usize),
    #[error("colouring is partial: vertex {0} has no colour")]
    PartialColouring(usize),
    #[error("colouring is not proper")]
    NotProper,
    #[error("not a perfect matching: {0}")]
    NotPerfectMatching(String),
    #[error("graph is not matching covered")]
    NotMatchingCovered,
    #[error("cut is not a non-trivial tight cut")]
    NotTight,
    #[error("edge set is not a subset of the matching")]
    NotSubsetOfMatching,
    #[error("M-direction is even, so the matching is not Pfaffian")]
    NotPfaffian,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("invalid colour count k = {0}")]
    InvalidK(usize),
    #[error("certificate check failed: {0}")]
    CertificateFailed(String),
    #[error("unsupported brick: {0}")]
    UnsupportedBrick(String),
    #[error("perfect matching fits no known type")]
    UnclassifiableMatching,
    #[error("invalid staircase order {0}")]
    InvalidOrder(usize),
    #[error("list of vertex {0} is too small")]
    ListTooSmall(usize),
    #[error("search budget exceeded")]
    SearchBudgetExceeded,
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
}

pub type Result<T> = std::result::Result<T, Error>;
