use thiserror::Error;

pub type Result<T, E = IasiError> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Each variant maps to a stable machine-readable code (see [`IasiError::code`])
/// which the command-line front end emits on its error stream.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IasiError {
    #[error("invalid set: {0}")]
    InvalidSet(String),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("label {label} is not an admissible AP-set: {reason}")]
    NotAdmissible { label: String, reason: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("the line graph of an edgeless graph is empty")]
    EmptyLineGraph,
    #[error("topological reduction not applicable at `{vertex}`: {reason}")]
    ReductionNotApplicable { vertex: String, reason: String },
    #[error("vertex `{0}` is isolated")]
    IsolatedVertex(String),

    #[error("vertex `{0}` has no label")]
    PartialLabeling(String),
    #[error("label given for vertex `{0}` which is not in the graph")]
    UnknownLabeledVertex(String),
    #[error("edge {edge}: neither deterministic index ({low_index}, {high_index}) divides the other")]
    NoKFactor {
        edge: String,
        low_index: u64,
        high_index: u64,
    },

    #[error("transfer broke injectivity: {0}")]
    TransferCollision(String),
    #[error("construction failed: no injective labeling with first terms up to {bound}")]
    ConstructionFailed { bound: u64 },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("search too large: {vertices} vertices exceeds the cap of {cap}")]
    SearchTooLarge { vertices: usize, cap: usize },
    #[error("invalid search bounds: {0}")]
    InvalidBounds(String),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("unknown fixture graph `{0}`")]
    UnknownFixture(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl IasiError {
    pub fn code(&self) -> &'static str {
        match self {
            IasiError::InvalidSet(_) => "invalid-set",
            IasiError::Overflow(_) => "overflow",
            IasiError::NotAdmissible { .. } => "not-admissible-label",
            IasiError::InvalidGraph(_) => "invalid-graph",
            IasiError::UnknownVertex(_) => "unknown-vertex",
            IasiError::UnknownEdge(_) => "unknown-edge",
            IasiError::EmptyLineGraph => "empty-line-graph",
            IasiError::ReductionNotApplicable { .. } => "reduction-not-applicable",
            IasiError::IsolatedVertex(_) => "isolated-vertex",
            IasiError::PartialLabeling(_) => "partial-labeling",
            IasiError::UnknownLabeledVertex(_) => "unknown-labeled-vertex",
            IasiError::NoKFactor { .. } => "no-k-factor",
            IasiError::TransferCollision(_) => "transfer-collision",
            IasiError::ConstructionFailed { .. } => "construction-failed",
            IasiError::NotApplicable(_) => "not-applicable",
            IasiError::InvalidParameter(_) => "invalid-parameter",
            IasiError::SearchTooLarge { .. } => "search-too-large",
            IasiError::InvalidBounds(_) => "invalid-bounds",
            IasiError::UnknownTheorem(_) => "unknown-theorem",
            IasiError::UnknownFixture(_) => "unknown-fixture",
            IasiError::Parse(_) => "parse-error",
            IasiError::Io(_) => "io-error",
        }
    }
}
