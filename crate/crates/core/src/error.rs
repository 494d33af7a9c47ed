use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("square root of non-positive rational {0}")]
    NonPositiveSqrt(String),

    #[error("cannot parse `{text}`: {reason}")]
    Parse { text: String, reason: String },

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<u32>, reason: String },

    #[error("mixed-degree operation on power-sum vectors ({0} vs {1})")]
    DegreeMismatch(usize, usize),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("{0}")]
    Precondition(String),

    #[error("invalid group data: {0}")]
    InvalidGroup(String),

    #[error("unknown color `{0}`")]
    UnknownColor(String),

    #[error("rank {n} outside 1..={max} for the {family} family")]
    RankOutOfRange { family: String, n: usize, max: usize },

    #[error("cover of order {order} exceeds the cap {cap}")]
    CoverTooLarge { order: u64, cap: u64 },

    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    #[error("missing value for class {0}")]
    MissingValue(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
