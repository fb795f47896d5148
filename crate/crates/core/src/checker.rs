//! The prefix-sum test for losing-score sequences and its score dual.
//!
//! A non-decreasing sequence `r_1 <= .. <= r_n` of non-negative integers is
//! the losing-score sequence of some k-hypertournament exactly when every
//! prefix sum satisfies `r_1 + .. + r_j >= C(j, k)`, with equality at
//! `j = n`. Scores and losing scores are tied by `s(v) + r(v) = C(n-1, k-1)`,
//! which turns the same test into one for score sequences.

use alloc::vec::Vec;
use core::fmt;

use crate::binom::choose;
use crate::error::{DualRangeError, EnvelopeError};
use crate::model::{LosingScoreSequence, ScoreSequence, MAX_VERTICES};

/// Outcome class of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Valid,
    /// `r_1 + .. + r_j < C(j, k)` for some `j < n`.
    PrefixViolation,
    /// The full sum differs from `C(n, k)`.
    SumMismatch,
    NotSorted,
    NegativeEntry,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Valid => "valid",
            Verdict::PrefixViolation => "prefix-violation",
            Verdict::SumMismatch => "sum-mismatch",
            Verdict::NotSorted => "not-sorted",
            Verdict::NegativeEntry => "negative-entry",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Witness {
    index: usize,
    lhs: i128,
    rhs: i128,
}

/// Result of a check. Failing reports carry the smallest failing 1-based
/// position `j` and the two sides of the comparison that failed there:
///
/// | verdict            | lhs               | rhs          |
/// |--------------------|-------------------|--------------|
/// | `NegativeEntry`    | `r_j`             | `0`          |
/// | `NotSorted`        | `r_j`             | `r_{j-1}`    |
/// | `PrefixViolation`  | `r_1 + .. + r_j`  | `C(j, k)`    |
/// | `SumMismatch`      | `r_1 + .. + r_n`  | `C(n, k)`    |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CheckReport {
    verdict: Verdict,
    witness: Option<Witness>,
}

impl CheckReport {
    const VALID: CheckReport = CheckReport {
        verdict: Verdict::Valid,
        witness: None,
    };

    fn fail(verdict: Verdict, index: usize, lhs: i128, rhs: i128) -> Self {
        CheckReport {
            verdict,
            witness: Some(Witness { index, lhs, rhs }),
        }
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::Valid
    }

    pub fn witness_index(&self) -> Option<usize> {
        self.witness.map(|w| w.index)
    }

    pub fn lhs(&self) -> Option<i128> {
        self.witness.map(|w| w.lhs)
    }

    pub fn rhs(&self) -> Option<i128> {
        self.witness.map(|w| w.rhs)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.witness {
            None => f.write_str("valid"),
            Some(w) => {
                let rel = if self.verdict == Verdict::SumMismatch {
                    "!="
                } else {
                    "<"
                };
                write!(
                    f,
                    "{} at j={}: {} {} {}",
                    self.verdict, w.index, w.lhs, rel, w.rhs
                )
            }
        }
    }
}

/// Checks a raw sequence. Malformed input (unsorted, negative) yields a
/// failing verdict; only an out-of-envelope request (`k < 2` or more than
/// 64 entries) is an error.
pub fn check_losing_scores(scores: &[i64], k: usize) -> Result<CheckReport, EnvelopeError> {
    check_envelope_loose(scores.len(), k)?;
    let wide: Vec<i128> = scores.iter().map(|&r| r as i128).collect();
    Ok(check_wide(&wide, k))
}

/// Checks a sequence whose shape is already known to be sorted and non-negative.
pub fn check_losing_sequence(seq: &LosingScoreSequence) -> CheckReport {
    let wide: Vec<i128> = seq.scores().iter().map(|&r| r as i128).collect();
    check_wide(&wide, seq.k())
}

fn check_envelope_loose(n: usize, k: usize) -> Result<(), EnvelopeError> {
    if k < 2 {
        Err(EnvelopeError::ArityTooSmall { k })
    } else if n > MAX_VERTICES {
        Err(EnvelopeError::TooManyVertices { n })
    } else {
        Ok(())
    }
}

fn check_wide(scores: &[i128], k: usize) -> CheckReport {
    let n = scores.len();
    let mut sum: i128 = 0;
    // C(j, k), updated as j grows
    let mut bound: u128 = 0;
    for j in 1..=n {
        let r = scores[j - 1];
        if r < 0 {
            return CheckReport::fail(Verdict::NegativeEntry, j, r, 0);
        }
        if j > 1 && r < scores[j - 2] {
            return CheckReport::fail(Verdict::NotSorted, j, r, scores[j - 2]);
        }
        sum += r;
        bound = match j.cmp(&k) {
            core::cmp::Ordering::Less => 0,
            core::cmp::Ordering::Equal => 1,
            // exact: C(j-1,k) * j is always divisible by j - k
            core::cmp::Ordering::Greater => bound * j as u128 / (j - k) as u128,
        };
        let bound = bound as i128;
        if j < n && sum < bound {
            return CheckReport::fail(Verdict::PrefixViolation, j, sum, bound);
        }
        if j == n && sum != bound {
            return CheckReport::fail(Verdict::SumMismatch, j, sum, bound);
        }
    }
    CheckReport::VALID
}

/// Maps a sorted losing-score sequence to the sorted score sequence of the
/// same hypertournaments, and vice versa: each entry is complemented against
/// `C(n-1, k-1)` and the result reversed. The map is an involution.
pub fn dual_sequence(seq: &[u64], k: usize) -> Result<Vec<u64>, DualRangeError> {
    let n = seq.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let bound = choose(n - 1, k - 1);
    if let Some((index, &value)) = seq.iter().enumerate().find(|(_, &x)| x > bound) {
        return Err(DualRangeError {
            index,
            value,
            bound,
        });
    }
    Ok(seq.iter().rev().map(|&x| bound - x).collect())
}

/// Checks a raw score sequence by checking its losing-score dual. Entries
/// above `C(n-1, k-1)` show up as negative entries of the dual, and witness
/// positions refer to the dual sequence.
pub fn check_score_scores(scores: &[i64], k: usize) -> Result<CheckReport, EnvelopeError> {
    check_envelope_loose(scores.len(), k)?;
    Ok(check_wide(
        &raw_dual(scores.iter().map(|&s| s as i128), scores.len(), k),
        k,
    ))
}

pub fn check_score_sequence(seq: &ScoreSequence) -> CheckReport {
    let raw = raw_dual(seq.scores().iter().map(|&s| s as i128), seq.n(), seq.k());
    check_wide(&raw, seq.k())
}

fn raw_dual<I>(scores: I, n: usize, k: usize) -> Vec<i128>
where
    I: DoubleEndedIterator<Item = i128>,
{
    let bound = if n == 0 {
        0
    } else {
        choose(n - 1, k - 1) as i128
    };
    scores.rev().map(|s| bound - s).collect()
}
