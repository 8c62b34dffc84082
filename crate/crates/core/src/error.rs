use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("graph has {n} vertices, at least {min} required")]
    TooFewVertices { n: usize, min: usize },
    #[error("{what} supports at most {limit} vertices, got {n}")]
    TooManyVertices {
        n: usize,
        limit: usize,
        what: &'static str,
    },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("set functions are defined over different universes")]
    UniverseMismatch,
    #[error("universe of {0} vertices is too large for a subset table")]
    TableTooLarge(usize),
    #[error("value bound overflows the table encoding")]
    BoundOverflow,
    #[error("set function must be 0 on the empty set")]
    NonZeroOnEmpty,
    #[error("no partition exists")]
    NoPartition,
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("{0} requires the default size-2 convention (k2-is-hc = false)")]
    UnsupportedConvention(&'static str),
    #[error("cut enumeration exceeded the cap of {0} cuts")]
    CapExceeded(u64),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("{msg} at line {line}")]
    Parse { line: usize, msg: String },
}
