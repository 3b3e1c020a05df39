use thiserror::Error;

/// Errors produced by graph construction, analysis, and sampling.
#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed input file. `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("empty graph")]
    EmptyGraph,

    #[error("no edges")]
    NoEdges,

    #[error("node {node} out of range (graph has {node_count} nodes)")]
    NodeOutOfRange { node: u32, node_count: usize },

    #[error("{u}-{v} is not an edge of the graph")]
    EdgeNotFound { u: u32, v: u32 },

    #[error("no reachable pairs")]
    NoReachablePairs,

    #[error("no connected triples")]
    NoTriples,

    /// Power-law fit needs at least two distinct degrees with nonzero count.
    #[error("insufficient support: {points} usable point(s), need at least 2")]
    InsufficientSupport { points: usize },

    #[error("degenerate distribution: zero variance")]
    DegenerateDistribution,

    /// A sampler ran out of material before reaching its target size.
    #[error("sampler exhausted: collected {collected} of {target} nodes")]
    Exhausted { collected: usize, target: usize },

    /// An error raised while processing one sample of a repeated run.
    #[error("sample {index}: {source}")]
    InSample {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn in_sample(index: usize, source: Error) -> Self {
        Error::InSample {
            index,
            source: Box::new(source),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
