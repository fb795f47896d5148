//! Exhaustive ground truth at small sizes.
//!
//! [`all_losing_sequences_bruteforce`] walks every choice of one loser per
//! k-subset and records the sorted losing vectors it produces. Orderings of
//! the non-losers are never enumerated: they do not affect losing scores.
//! [`enumerate_valid_sequences`] instead generates sequences directly from
//! the prefix-sum bounds. The two sets agree exactly when the prefix
//! condition characterizes losing-score sequences.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::binom::choose;
use crate::error::{check_envelope, EnvelopeError};
use crate::model::{LosingScoreSequence, Vertex};
use crate::subset::{members, subsets};

/// Default cap on the number of loser assignments the brute force visits.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    Envelope(EnvelopeError),
    /// `states` is `None` when the count itself overflows 128 bits.
    BudgetExceeded {
        states: Option<u128>,
        budget: u128,
    },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::Envelope(e) => e.fmt(f),
            OracleError::BudgetExceeded {
                states: Some(s),
                budget,
            } => {
                write!(f, "{s} states exceed the budget of {budget}")
            }
            OracleError::BudgetExceeded {
                states: None,
                budget,
            } => {
                write!(f, "state count overflows 128 bits (budget {budget})")
            }
        }
    }
}

impl core::error::Error for OracleError {}

impl From<EnvelopeError> for OracleError {
    fn from(e: EnvelopeError) -> Self {
        OracleError::Envelope(e)
    }
}

/// A set of sorted sequences of length `n`, all with sum `C(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSet {
    pub n: usize,
    pub k: usize,
    pub sequences: BTreeSet<Vec<u64>>,
}

impl SequenceSet {
    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    pub fn contains(&self, seq: &[u64]) -> bool {
        self.sequences.contains(seq)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<u64>> {
        self.sequences.iter()
    }
}

/// `k ^ C(n, k)`, or `None` on overflow.
pub fn state_count(n: usize, k: usize) -> Option<u128> {
    let exp = u32::try_from(choose(n, k)).ok()?;
    (k as u128).checked_pow(exp)
}

pub fn all_losing_sequences_bruteforce(
    n: usize,
    k: usize,
    budget: u128,
) -> Result<SequenceSet, OracleError> {
    check_envelope(n, k)?;
    let states = state_count(n, k);
    match states {
        Some(s) if s <= budget => {}
        _ => return Err(OracleError::BudgetExceeded { states, budget }),
    }

    let choices: Vec<Vec<Vertex>> = subsets(n, k).map(|s| members(s).collect()).collect();
    let mut digit = vec![0usize; choices.len()];
    let mut losses = vec![0u64; n];
    for c in &choices {
        losses[c[0]] += 1;
    }
    let mut found = BTreeSet::new();
    let mut buf = vec![0u64; n];
    loop {
        buf.copy_from_slice(&losses);
        buf.sort_unstable();
        if !found.contains(&buf) {
            found.insert(buf.clone());
        }
        // odometer step
        let mut i = 0;
        loop {
            if i == choices.len() {
                return Ok(SequenceSet {
                    n,
                    k,
                    sequences: found,
                });
            }
            losses[choices[i][digit[i]]] -= 1;
            digit[i] += 1;
            if digit[i] < k {
                losses[choices[i][digit[i]]] += 1;
                break;
            }
            digit[i] = 0;
            losses[choices[i][0]] += 1;
            i += 1;
        }
    }
}

/// Whether the sorted `seq` is produced by some loser assignment.
pub fn is_realizable_bruteforce(
    seq: &LosingScoreSequence,
    budget: u128,
) -> Result<bool, OracleError> {
    let all = all_losing_sequences_bruteforce(seq.n(), seq.k(), budget)?;
    Ok(all.contains(seq.scores()))
}

/// All non-decreasing sequences meeting the prefix-sum bounds, generated by
/// depth-first search.
///
/// Position `j` takes a value `x >= r_{j-1}`, at most `C(n-1, k-1)`, such
/// that the prefix bound `C(j, k)` holds and the remaining total can still
/// be spread over the remaining slots without dropping below `x`.
pub fn enumerate_valid_sequences(n: usize, k: usize) -> Result<SequenceSet, EnvelopeError> {
    check_envelope(n, k)?;
    let total = choose(n, k);
    let cap = choose(n - 1, k - 1);
    let mut out = BTreeSet::new();
    let mut cur = Vec::with_capacity(n);
    dfs(n, k, total, cap, 0, &mut cur, &mut out);
    Ok(SequenceSet {
        n,
        k,
        sequences: out,
    })
}

fn dfs(
    n: usize,
    k: usize,
    total: u64,
    cap: u64,
    sum: u64,
    cur: &mut Vec<u64>,
    out: &mut BTreeSet<Vec<u64>>,
) {
    let j = cur.len() + 1;
    let lo = cur.last().copied().unwrap_or(0);
    if j == n {
        let last = total - sum;
        if last >= lo && last <= cap {
            cur.push(last);
            out.insert(cur.clone());
            cur.pop();
        }
        return;
    }
    let slots_after = (n - j) as u64;
    let need = choose(j, k);
    for x in lo..=cap {
        let s = sum + x;
        if s > total || total - s < slots_after * x {
            break;
        }
        if s < need || total - s > slots_after * cap {
            continue;
        }
        cur.push(x);
        dfs(n, k, total, cap, s, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(rows: &[&[u64]]) -> BTreeSet<Vec<u64>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn bruteforce_examples() {
        let s = all_losing_sequences_bruteforce(3, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(s.sequences, set(&[&[0, 0, 1]]));
        let s = all_losing_sequences_bruteforce(4, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            s.sequences,
            set(&[&[0, 0, 1, 3], &[0, 0, 2, 2], &[0, 1, 1, 2], &[1, 1, 1, 1]])
        );
        let s = all_losing_sequences_bruteforce(2, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(s.sequences, set(&[&[0, 0]]));
    }

    #[test]
    fn realizable_examples() {
        let q = |r: &[u64]| {
            is_realizable_bruteforce(
                &LosingScoreSequence::new(3, r.to_vec()).unwrap(),
                DEFAULT_BUDGET,
            )
            .unwrap()
        };
        assert!(q(&[0, 0, 1]));
        assert!(!q(&[0, 0, 0, 4]));
        assert!(q(&[1, 1, 1, 1]));
    }

    #[test]
    fn budget_is_enforced() {
        let err = all_losing_sequences_bruteforce(4, 3, 80).unwrap_err();
        assert_eq!(
            err,
            OracleError::BudgetExceeded {
                states: Some(81),
                budget: 80
            }
        );
        assert!(matches!(
            all_losing_sequences_bruteforce(64, 32, DEFAULT_BUDGET),
            Err(OracleError::BudgetExceeded { states: None, .. })
        ));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_valid_sequences(3, 3).unwrap().sequences,
            set(&[&[0, 0, 1]])
        );
        assert_eq!(
            enumerate_valid_sequences(5, 5).unwrap().sequences,
            set(&[&[0, 0, 0, 0, 1]])
        );
        assert_eq!(
            enumerate_valid_sequences(4, 3).unwrap(),
            all_losing_sequences_bruteforce(4, 3, DEFAULT_BUDGET).unwrap()
        );
        assert_eq!(
            enumerate_valid_sequences(2, 3).unwrap().sequences,
            set(&[&[0, 0]])
        );
    }
}
