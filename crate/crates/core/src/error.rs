use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("unsupported size: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("group is not contained in the requested ambient group: {0}")]
    NotInAmbient(String),

    #[error("matrix has rank {rank}, below the requested {target}")]
    RankDeficient { rank: usize, target: usize },

    #[error("evaluation point is degenerate for the candidate system")]
    DegeneratePoint,

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit code used by the command-line frontend.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_)
            | Error::RankMismatch { .. }
            | Error::InvalidInput(_)
            | Error::NotInAmbient(_) => 2,
            Error::Unsupported(_) => 3,
            Error::RankDeficient { .. } | Error::DegeneratePoint | Error::Invariant(_) => 4,
        }
    }

    /// Stable machine-readable error code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::RankMismatch { .. } => "rank_mismatch",
            Error::Unsupported(_) => "unsupported_size",
            Error::InvalidInput(_) => "invalid_input",
            Error::NotInAmbient(_) => "not_in_ambient",
            Error::RankDeficient { .. } => "rank_deficient",
            Error::DegeneratePoint => "degenerate_point",
            Error::Invariant(_) => "invariant_violation",
        }
    }
}
