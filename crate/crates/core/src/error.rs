use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfcError {
    #[error("rank must be at least 1 and at most {max}, got {rank}")]
    InvalidRank { rank: usize, max: usize },
    #[error("generator {gen} is outside 1..={rank}")]
    InvalidGenerator { gen: usize, rank: usize },
    #[error("word {word} is not reduced")]
    NotReduced { word: String },
    #[error("word {word} is not cyclically fully commutative")]
    NotCfc { word: String },
    #[error("reduced-expression closure exceeded the cap of {cap} words")]
    ClosureTooLarge { cap: usize },
    #[error("permutation degrees differ: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("ranks differ: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("rank {rank} exceeds the configured cap of {cap}")]
    RankTooLarge { rank: usize, cap: usize },
    #[error("no maximal block of the heap is labeled {gen}")]
    NotMaximalBlock { gen: usize },
    #[error("chunk ending at {end} touches the last generator {rank}")]
    ChunkAtBoundary { end: usize, rank: usize },
    #[error("{0}")]
    OutOfRange(String),
    #[error("factor at position {pos} does not match the expected pattern")]
    PatternMismatch { pos: usize },
    #[error("conjugator failed verification in the symmetric group")]
    VerificationFailed,
    #[error("parse error: {0}")]
    Parse(String),
}

impl CfcError {
    /// Stable machine-readable code, used by the CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            CfcError::InvalidRank { .. } => "InvalidRank",
            CfcError::InvalidGenerator { .. } => "InvalidGenerator",
            CfcError::NotReduced { .. } => "NotReduced",
            CfcError::NotCfc { .. } => "NotCFC",
            CfcError::ClosureTooLarge { .. } => "ClosureTooLarge",
            CfcError::DegreeMismatch { .. } => "DegreeMismatch",
            CfcError::RankMismatch { .. } => "RankMismatch",
            CfcError::RankTooLarge { .. } => "RankTooLarge",
            CfcError::NotMaximalBlock { .. } => "NotMaximalBlock",
            CfcError::ChunkAtBoundary { .. } => "ChunkAtBoundary",
            CfcError::OutOfRange(_) => "OutOfRange",
            CfcError::PatternMismatch { .. } => "PatternMismatch",
            CfcError::VerificationFailed => "VerificationFailed",
            CfcError::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, CfcError>;
