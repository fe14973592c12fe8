use thiserror::Error;

/// Errors raised by graph construction, analysis and the two conversions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex id `{0}`")]
    UnknownVertex(String),
    #[error("edge `{0}`-`{1}` joins two vertices on the same side")]
    SameSideEdge(String, String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}`-`{1}`")]
    DuplicateEdge(String, String),
    #[error("graph is not bipartite (odd cycle through `{0}`)")]
    NotBipartite(String),
    #[error("connectivity required")]
    NotConnected,
    #[error("not a caterpillar")]
    NotCaterpillar,
    #[error("empty graph is not a valid input here")]
    EmptyGraph,
    #[error("invalid layer order: {0}")]
    InvalidOrder(String),
    #[error("unknown edge {0}")]
    UnknownEdge(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("size cap exceeded: {what} = {value} > {cap}")]
    SizeCap { what: &'static str, value: usize, cap: usize },
    #[error("search cap exceeded: {what} = {value} > {cap}")]
    SearchCap { what: &'static str, value: usize, cap: usize },
    #[error("empty bag list")]
    EmptyDecomposition,
    #[error("bag {bag} contains vertex index {vertex} not in the graph")]
    ForeignVertex { bag: usize, vertex: usize },
    #[error("invalid path-decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("witness does not re-verify: {0}")]
    BadWitness(String),
    #[error("layout verification failed: {0}")]
    LayoutVerification(String),
    #[error("malformed input: {0}")]
    Format(String),
}

impl Error {
    /// True for the two cap errors, which callers usually map to a dedicated exit status.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::SizeCap { .. } | Error::SearchCap { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
