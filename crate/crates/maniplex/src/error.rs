use thiserror::Error;

/// Errors shared across the crate.
///
/// Validation errors carry enough indices to point at the offending entry of
/// a connection table, so a failed parse of a document can report a precise
/// field path like `connections[i][f]`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("connections[{color}] is not an involution at flag {flag}")]
    NotInvolution { color: usize, flag: usize },

    #[error("colors {i} and {j} do not commute at flag {flag}")]
    CommutationFailure { i: usize, j: usize, flag: usize },

    #[error("flag graph is not connected")]
    Disconnected,

    #[error("malformed connection table: {0}")]
    Malformed(String),

    #[error("color interval is empty")]
    EmptyInterval,

    #[error("flag {flag} out of range (flag count {flag_count})")]
    FlagOutOfRange { flag: usize, flag_count: usize },

    #[error("operands have different ranks ({0} vs {1})")]
    RankMismatch(usize, usize),

    #[error("color set {0} is not a proper subset of the colors")]
    ImproperColorSet(String),

    #[error("element list is not a subgroup of the automorphism group")]
    NotASubgroup,

    #[error("premaniplex is not a maniplex (a connection or a product of two has a fixed point)")]
    NotAManiplex,

    #[error("generators do not satisfy the string group relations: {0}")]
    NotSggi(String),

    #[error("mode precondition violated: {0}")]
    ModePrecondition(&'static str),

    #[error("input is not admissible for this operation: {0}")]
    NotAdmissible(&'static str),

    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("empty input list")]
    EmptyList,

    #[error("document schema error: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
