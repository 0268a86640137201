use thiserror::Error;

use super::{RowKind, Triangle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankingError {
    #[error("row {row} mixes x/y with a/b entries or has unequal differences")]
    MixedRow { row: usize },
    #[error("row {row} has difference {found} but rank {expected}")]
    RankMismatch { row: usize, expected: u32, found: u32 },
}

/// Ranks of rows `0..=n` of a triangle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ranking {
    ranks: Vec<u32>,
}

impl Ranking {
    /// The unique admissible ranking, built upward from `rank(n) = 0`,
    /// `rank(n-1) = 1`.
    pub fn compute(t: &Triangle) -> Result<Self, RankingError> {
        let n = t.n();
        let mut ranks = vec![0u32; n + 1];
        ranks[n - 1] = 1;
        for r in (1..n).rev() {
            let k = ranks[r];
            ranks[r - 1] = match t.row_kind(r) {
                RowKind::X => k,
                RowKind::V(d) if d == k => k + 1,
                RowKind::V(d) => {
                    return Err(RankingError::RankMismatch {
                        row: r,
                        expected: k,
                        found: d,
                    })
                }
                RowKind::Mixed => return Err(RankingError::MixedRow { row: r }),
            };
        }
        Ok(Ranking { ranks })
    }

    /// Checks an arbitrary assignment against the admissible-ranking rules.
    pub fn is_admissible_for(t: &Triangle, ranks: &[u32]) -> bool {
        let n = t.n();
        if ranks.len() != n + 1 || ranks[n] != 0 || ranks[n - 1] != 1 {
            return false;
        }
        (1..n).all(|r| {
            let k = ranks[r];
            match t.row_kind(r) {
                RowKind::X => ranks[r - 1] == k,
                RowKind::V(d) => d == k && ranks[r - 1] == k + 1,
                RowKind::Mixed => false,
            }
        })
    }

    /// Rank of row `r`, `0 <= r <= n`.
    pub fn rank(&self, r: usize) -> u32 {
        self.ranks[r]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.ranks
    }
}
