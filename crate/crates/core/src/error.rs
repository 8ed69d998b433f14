use thiserror::Error;

/// Every failure the library can report.
///
/// Variants map onto the domain errors of the individual operations; the CLI
/// turns all of them into exit code 1.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate element id `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("cover relation contains a cycle through `{0}`")]
    CycleError(String),
    #[error("poset is not graded: {0}")]
    NotGraded(String),
    #[error("invalid PIP: {0}")]
    InvalidPip(String),
    #[error("structure is not a median semilattice")]
    NotMedian,
    #[error("structure is not a modular lattice: {0}")]
    NotModular(String),
    #[error("structure is not a modular semilattice: {0}")]
    NotModularSemilattice(String),
    #[error("enumeration exceeds the size cap of {cap} ({what})")]
    SizeCap { what: &'static str, cap: usize },
    #[error("points do not lie in a common simplex")]
    NotCommonSimplex,
    #[error("point support lies outside the frame: {0}")]
    SupportOutsideFrame(String),
    #[error("join of `{0}` and `{1}` does not exist")]
    JoinUndefined(String, String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("s-t path of infinite capacity")]
    InfiniteFlow,
    #[error("invalid flow network: {0}")]
    InvalidNetwork(String),
    #[error("PIP is not bipartite with respect to the point supports: {0}")]
    NotBipartitePip(String),
    #[error("arch has an empty block at position {0}")]
    EmptyBlock(usize),
    #[error("invalid arch: {0}")]
    InvalidArch(String),
    #[error("arch is not (x,y)-concave")]
    NotConcave,
    #[error("point supports do not match the arch ends: {0}")]
    SupportMismatch(String),
    #[error("chain is not maximal: {0}")]
    ChainNotMaximal(String),
    #[error("points are not orthogonal: {0}")]
    NotOrthogonal(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
