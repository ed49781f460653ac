use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("graph has no directed cycle")]
    NoCycle,

    #[error("graph is not acyclic")]
    NotAcyclic,

    #[error("period {0} is not even")]
    OddPeriod(u64),

    #[error("underlying undirected graph is not bipartite")]
    NotBipartite,

    #[error("seed is not contained in layer {layer}")]
    SeedOutsideLayer { layer: usize },

    #[error("graph has {n} vertices, above the size guard of {cap}")]
    SizeGuard { n: usize, cap: usize },

    #[error("work budget of {budget} propagation steps exhausted")]
    BudgetExceeded { budget: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("construction failed: {0}")]
    Construction(String),
}

impl Error {
    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidParameter(message.into())
    }

    /// The error with any line annotation stripped.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            other => other,
        }
    }

    /// True for the two resource-guard failures (size cap and work budget).
    pub fn is_resource_limit(&self) -> bool {
        matches!(self.root(), Error::SizeGuard { .. } | Error::BudgetExceeded { .. })
    }
}
