use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: i32, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("word length {len} exceeds the configured cap of {cap} letters")]
    WordTooLong { len: usize, cap: usize },

    #[error("images do not define an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("curve {0} is not a simple closed curve in the band model")]
    NotSimple(String),

    #[error("genus must be at least {min}, got {genus}")]
    GenusTooSmall { genus: usize, min: usize },

    #[error("{name} is not defined at genus {genus}: {reason}")]
    InvalidName {
        name: String,
        genus: usize,
        reason: String,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not a base curve; use a conjugated twist instead")]
    NotBaseCurve(String),

    #[error("model certification failed: {0}")]
    Certification(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("unknown format `{0}`")]
    UnknownFormat(String),

    #[error("presentation scheme mismatch: expected {expected}, got {got}")]
    WrongScheme { expected: String, got: String },

    #[error("genus mismatch: presentation has genus {presentation}, model has genus {model}")]
    GenusMismatch { presentation: usize, model: usize },

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
