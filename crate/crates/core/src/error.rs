use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph is not bipartite: odd cycle through vertex {vertex}")]
    NotBipartite { vertex: i64 },

    #[error("embedding inconsistent: {0}")]
    EmbeddingInconsistent(String),

    #[error("invalid graph input: {0}")]
    InvalidInput(String),

    #[error("graph has no handles (every vertex has degree 2)")]
    NoHandles,

    #[error("handles around face s{face} do not alternate interior/exterior")]
    NotAlternating { face: usize },

    #[error("graph has no perfect matching")]
    NoPerfectMatching,

    #[error("more than {cap} perfect matchings")]
    CapExceeded { cap: usize },

    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),

    #[error("bad selector: {0}")]
    BadSelector(String),

    #[error("not found: {0}")]
    NotFound(String),

    #[error("face order is not a reducible face decomposition at step {step}: {reason}")]
    NotReducibleAtStep { step: usize, reason: String },

    #[error("peeling stuck with {remaining} faces left: no reducible face")]
    PeelingStuck { remaining: usize },

    #[error("clause {clause} violated: {detail}")]
    ClauseViolated { clause: String, detail: String },

    #[error("bad attachment map: {0}")]
    BadAlpha(String),

    #[error("label set mismatch: {0}")]
    LabelSetMismatch(String),

    #[error("property violated: {0}")]
    PropertyViolated(String),

    #[error("not an expansion: {0}")]
    NotAnExpansion(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn violated(clause: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::ClauseViolated {
            clause: clause.into(),
            detail: detail.into(),
        }
    }
}
