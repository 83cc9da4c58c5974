use thiserror::Error;

/// Every failure mode surfaced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex or index {index} out of range (limit {limit})")]
    OutOfRange { index: usize, limit: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex {to} is unreachable from vertex {from}")]
    Unreachable { from: usize, to: usize },

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("sampled tree exceeded the size cap of {0} vertices")]
    SizeCapExceeded(usize),

    #[error("rejection sampler gave up after {0} attempts")]
    RejectionBudgetExceeded(usize),

    #[error("degree sequence has odd sum {0}")]
    OddDegreeSum(usize),

    #[error("kernel has {0} vertices; need at least 2")]
    DegenerateKernel(usize),

    #[error("{what} too large: {size} (cap {cap})")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("eigensolver did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("bad boundary condition: {0}")]
    BadBoundary(String),

    #[error("test vector is not centered (sum {0:e})")]
    NotCentered(f64),

    #[error("graph is not a tree")]
    NotATree,

    #[error("need at least 3 distinct x values to fit, got {0}")]
    TooFewPoints(usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Short stable name, used in the `error` column of sweep output.
    pub fn class(&self) -> &'static str {
        match self {
            Error::OutOfRange { .. } => "OutOfRange",
            Error::SelfLoop(_) => "SelfLoop",
            Error::DuplicateEdge(..) => "DuplicateEdge",
            Error::Disconnected => "Disconnected",
            Error::EmptyGraph => "EmptyGraph",
            Error::Unreachable { .. } => "Unreachable",
            Error::BadParams(_) => "BadParams",
            Error::SizeCapExceeded(_) => "SizeCapExceeded",
            Error::RejectionBudgetExceeded(_) => "RejectionBudgetExceeded",
            Error::OddDegreeSum(_) => "OddDegreeSum",
            Error::DegenerateKernel(_) => "DegenerateKernel",
            Error::TooLarge { .. } => "TooLarge",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::BadBoundary(_) => "BadBoundary",
            Error::NotCentered(_) => "NotCentered",
            Error::NotATree => "NotATree",
            Error::TooFewPoints(_) => "TooFewPoints",
            Error::Parse { .. } => "Parse",
            Error::Config(_) => "Config",
            Error::Io(_) => "Io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
