use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown group preset `{0}`")]
    UnknownPreset(String),

    #[error("invalid permutation `{input}`: {reason}")]
    InvalidPermutation { input: String, reason: String },

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("group order exceeds the configured cap of {cap}")]
    OrderCapExceeded { cap: usize },

    #[error("invalid group specification: {0}")]
    InvalidGroupSpec(String),

    #[error("invalid signature `{input}`: {reason}")]
    InvalidSignature { input: String, reason: String },

    #[error("signature {signature} is incompatible with a group of order {order}: {reason}")]
    IncompatibleSignature {
        signature: String,
        order: usize,
        reason: String,
    },

    #[error("edge collapse in cut system {cut}: trivial crossover transformation at {positions:?}")]
    EdgeCollapse { cut: String, positions: Vec<String> },

    #[error("patch inputs do not match: {0}")]
    MismatchedPatchInputs(String),

    #[error("unknown cut system `{0}`")]
    UnknownCut(String),

    #[error("vertex {0} does not belong to the cut system")]
    UnknownVertex(String),

    #[error("class list is incomplete: image of class {0} under a braid move was not found")]
    IncompleteClassList(usize),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
