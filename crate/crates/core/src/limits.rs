use crate::error::{CfcError, Result};
use crate::word::Rank;

/// Rank caps for the exhaustive sweeps, which grow like `(n+1)!`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Enumeration and class tables.
    pub max_enumeration_rank: usize,
    /// Conjecture sweeps over all of `S_{n+1}`.
    pub max_conjecture_rank: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_enumeration_rank: 9, max_conjecture_rank: 8 }
    }
}

impl Limits {
    /// Both caps raised (or lowered) to `rank`.
    pub fn with_max_rank(rank: usize) -> Limits {
        Limits { max_enumeration_rank: rank, max_conjecture_rank: rank }
    }

    pub fn check_enumeration(&self, rank: Rank) -> Result<()> {
        check(rank, self.max_enumeration_rank)
    }

    pub fn check_conjecture(&self, rank: Rank) -> Result<()> {
        check(rank, self.max_conjecture_rank)
    }
}

fn check(rank: Rank, cap: usize) -> Result<()> {
    if rank.get() > cap {
        Err(CfcError::RankTooLarge { rank: rank.get(), cap })
    } else {
        Ok(())
    }
}
