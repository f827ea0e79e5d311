use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("invalid parameters: k={k}, t={t} (need k >= 1 and t >= 2k-1)")]
    InvalidParams { k: u32, t: u32 },

    #[error("graph too large for exhaustive enumeration: n={n} exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("invalid generator spec: {0}")]
    InvalidGenSpec(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
