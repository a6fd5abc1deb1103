use thiserror::Error;

/// Errors raised by graph construction, parsing and the structural predicates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {0} is a loop at vertex {1}")]
    LoopEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("cannot contract an empty vertex set")]
    EmptyShore,
    #[error("shore must be a nonempty proper subset of the vertex set")]
    BadShore,
    #[error("malformed graph6 string: {0}")]
    MalformedGraph6(String),
    #[error("graph6 cannot encode parallel edges")]
    NotSimple,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{what} bound exceeded: {value} > {limit}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("graph is not matching covered")]
    NotMatchingCovered,
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph is not a bipartite matching covered graph")]
    NotBipartiteMC,
    #[error("graph is bipartite")]
    Bipartite,
    #[error("graph is not a brick")]
    NotABrick,
    #[error("vertex set is not a barrier")]
    NotABarrier,
    #[error("barrier is trivial")]
    BarrierTrivial,
    #[error("barrier is not maximal")]
    BarrierNotMaximal,
    #[error("vertex set is not an odd component of G - B")]
    NotAComponent,
    #[error("vertex pair is not a 2-separation")]
    NotA2Separation,
    #[error("bad wheel spec: {0}")]
    BadSpec(String),
    #[error("splice degrees differ: {0} != {1}")]
    DegreeMismatch(usize, usize),
    #[error("splice map is not a bijection")]
    NotABijection,
    #[error("both wheels must be odd")]
    NotOddWheels,
    #[error("invalid splice: {0}")]
    SpliceInvalid(String),
    #[error("certificate level {level}: {condition} violated")]
    ConditionViolated { level: usize, condition: String },
    #[error("unknown campaign {0:?}")]
    UnknownCampaign(String),
}

pub type Result<T> = std::result::Result<T, Error>;
