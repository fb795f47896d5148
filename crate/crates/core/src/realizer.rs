//! Explicit hypertournaments for valid losing-score sequences.
//!
//! Only the loser of each arc affects losing scores, so realizing a sequence
//! means choosing one loser per k-subset such that vertex `i` loses exactly
//! `r_{i+1}` arcs. Two strategies are offered:
//!
//! * [`Strategy::Assignment`] treats the choice as a capacitated bipartite
//!   assignment (subsets on one side, vertices with quotas on the other) and
//!   solves it greedily, repairing dead ends with alternating chains. A
//!   vertex set `X` of size `j` can absorb at most `sum_{v in X} r_v` losses
//!   and must absorb every subset inside `X`; for the `j` smallest quotas
//!   that is the prefix condition, so valid input never gets stuck.
//! * [`Strategy::Recursive`] splits at a prefix where the bound is tight:
//!   head `0..j` and tail `j..n` are realized independently and every mixed
//!   subset loses to a tail vertex, each tail vertex taking the same share.
//!   When no split with an integral share and a valid reduced tail exists,
//!   it falls back to the assignment strategy.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::binom::choose;
use crate::checker::{check_losing_sequence, CheckReport};
use crate::model::{Hypertournament, LosingScoreSequence, Vertex};
use crate::subset::{full_mask, lex_rank, members, subset_count, subsets};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    #[default]
    Assignment,
    Recursive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealizeError {
    /// The input failed the prefix check.
    InvalidSequence(CheckReport),
    /// The assignment could not be completed. Unreachable for valid input;
    /// seeing it means a bug.
    Infeasible { subset: u64 },
}

impl fmt::Display for RealizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealizeError::InvalidSequence(report) => write!(f, "invalid sequence: {report}"),
            RealizeError::Infeasible { subset } => {
                f.write_str("internal error: no loser available for subset {")?;
                for (i, v) in members(*subset).enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("}")
            }
        }
    }
}

impl core::error::Error for RealizeError {}

/// One loser per k-subset of `{0..n-1}`, indexed by canonical subset rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoserAssignment {
    n: usize,
    k: usize,
    losers: Vec<Vertex>,
}

impl LoserAssignment {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Losers in canonical subset order.
    pub fn losers(&self) -> &[Vertex] {
        &self.losers
    }

    pub fn loser_of(&self, subset: u64) -> Vertex {
        self.losers[lex_rank(subset, self.n, self.k)]
    }

    /// `(subset, loser)` pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, Vertex)> + '_ {
        subsets(self.n, self.k).zip(self.losers.iter().copied())
    }

    /// How many subsets each vertex loses.
    pub fn loss_counts(&self) -> Vec<u64> {
        let mut c = vec![0u64; self.n];
        for &l in &self.losers {
            c[l] += 1;
        }
        c
    }
}

/// Split of a sequence at a tight prefix, with the per-vertex share of
/// mixed-subset losses each tail vertex takes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseADecomposition {
    /// Head length `j`: vertices `0..j` form the head.
    pub split: usize,
    /// Tail length `n - j`.
    pub tail_len: usize,
    /// Number of k-subsets meeting both head and tail.
    pub mixed_subsets: u64,
    /// `mixed_subsets / tail_len`, integral whenever a decomposition exists.
    pub share: u64,
    pub head: LosingScoreSequence,
    /// Tail scores minus `share`.
    pub tail_reduced: LosingScoreSequence,
}

/// Smallest tight split `j < n` (prefix sum equal to `C(j, k)`) at which
/// the share is integral and the reduced tail is itself valid.
///
/// Returns `None` for invalid input or when no such split exists.
pub fn case_a_decompose(seq: &LosingScoreSequence) -> Option<CaseADecomposition> {
    if !check_losing_sequence(seq).is_valid() {
        return None;
    }
    let (n, k) = (seq.n(), seq.k());
    let r = seq.scores();
    let mut prefix = 0u64;
    for j in 1..n {
        prefix += r[j - 1];
        if prefix != choose(j, k) {
            continue;
        }
        let m = n - j;
        let mixed: u64 = (1..k).map(|i| choose(j, i) * choose(m, k - i)).sum();
        if !mixed.is_multiple_of(m as u64) {
            continue;
        }
        let share = mixed / m as u64;
        if r[j] < share {
            continue;
        }
        let tail: Vec<u64> = r[j..].iter().map(|&x| x - share).collect();
        let Ok(tail_reduced) = LosingScoreSequence::new(k, tail) else {
            continue;
        };
        if !check_losing_sequence(&tail_reduced).is_valid() {
            continue;
        }
        let head = LosingScoreSequence::new(k, r[..j].to_vec())
            .expect("prefix of a sorted sequence is sorted");
        return Some(CaseADecomposition {
            split: j,
            tail_len: m,
            mixed_subsets: mixed,
            share,
            head,
            tail_reduced,
        });
    }
    None
}

/// Greedy loser assignment with augmenting repair.
pub fn assign_losers(seq: &LosingScoreSequence) -> Result<LoserAssignment, RealizeError> {
    let report = check_losing_sequence(seq);
    if !report.is_valid() {
        return Err(RealizeError::InvalidSequence(report));
    }
    let (n, k) = (seq.n(), seq.k());
    let all: Vec<u64> = subsets(n, k).collect();
    let losers = assign(&all, |s| s, seq.scores().to_vec())?;
    Ok(LoserAssignment { n, k, losers })
}

/// Arcs for an assignment: non-losers ascending, loser last.
pub fn emit_arcs(assignment: &LoserAssignment) -> Hypertournament {
    Hypertournament::from_losers(assignment.n, assignment.k, &assignment.losers)
}

pub fn realize(
    seq: &LosingScoreSequence,
    strategy: Strategy,
) -> Result<Hypertournament, RealizeError> {
    match strategy {
        Strategy::Assignment => assign_losers(seq).map(|a| emit_arcs(&a)),
        Strategy::Recursive => realize_recursive(seq),
    }
}

pub fn realize_recursive(seq: &LosingScoreSequence) -> Result<Hypertournament, RealizeError> {
    let report = check_losing_sequence(seq);
    if !report.is_valid() {
        return Err(RealizeError::InvalidSequence(report));
    }
    let losers = recursive_losers(seq)?;
    Ok(Hypertournament::from_losers(seq.n(), seq.k(), &losers))
}

fn recursive_losers(seq: &LosingScoreSequence) -> Result<Vec<Vertex>, RealizeError> {
    let (n, k) = (seq.n(), seq.k());
    if n < k {
        return Ok(Vec::new());
    }
    let Some(dec) = case_a_decompose(seq) else {
        let all: Vec<u64> = subsets(n, k).collect();
        return assign(&all, |s| s, seq.scores().to_vec());
    };
    let j = dec.split;
    let m = dec.tail_len;
    let head = recursive_losers(&dec.head)?;
    let tail = recursive_losers(&dec.tail_reduced)?;

    let head_mask = full_mask(j);
    let tail_mask = full_mask(n) & !head_mask;
    let mut losers = vec![usize::MAX; subset_count(n, k)];
    let mut mixed = Vec::with_capacity(dec.mixed_subsets as usize);
    let mut mixed_slots = Vec::with_capacity(dec.mixed_subsets as usize);
    for (idx, s) in subsets(n, k).enumerate() {
        if s & tail_mask == 0 {
            losers[idx] = head[lex_rank(s, j, k)];
        } else if s & head_mask == 0 {
            losers[idx] = tail[lex_rank(s >> j, m, k)] + j;
        } else {
            mixed.push(s);
            mixed_slots.push(idx);
        }
    }
    let mut quota = vec![0u64; n];
    quota[j..].fill(dec.share);
    let mixed_losers = assign(&mixed, |s| s & tail_mask, quota)?;
    for (idx, l) in mixed_slots.into_iter().zip(mixed_losers) {
        losers[idx] = l;
    }
    Ok(losers)
}

/// Assigns each subset in `subs` a loser from `eligible(subset)` so that
/// vertex `v` receives exactly `quota[v]` subsets. `quota` must sum to
/// `subs.len()`.
///
/// Subsets are taken in order; each goes to the eligible vertex with the
/// most remaining quota (ties to the higher id). When every eligible vertex
/// is full, a breadth-first search over "vertex `v` hands one of its subsets
/// to another eligible member" finds a chain ending at a vertex with spare
/// quota, and the chain is shifted along.
fn assign<F>(subs: &[u64], eligible: F, mut quota: Vec<u64>) -> Result<Vec<Vertex>, RealizeError>
where
    F: Fn(u64) -> u64,
{
    let n = quota.len();
    let mut losers = vec![usize::MAX; subs.len()];
    let mut owned: Vec<Vec<usize>> = vec![Vec::new(); n];

    for (si, &s) in subs.iter().enumerate() {
        let pick = members(eligible(s))
            .filter(|&v| quota[v] > 0)
            .max_by_key(|&v| (quota[v], v));
        if let Some(v) = pick {
            quota[v] -= 1;
            losers[si] = v;
            owned[v].push(si);
            continue;
        }
        augment(subs, &eligible, si, &mut quota, &mut losers, &mut owned)?;
    }
    Ok(losers)
}

fn augment<F>(
    subs: &[u64],
    eligible: &F,
    start: usize,
    quota: &mut [u64],
    losers: &mut [Vertex],
    owned: &mut [Vec<usize>],
) -> Result<(), RealizeError>
where
    F: Fn(u64) -> u64,
{
    const ROOT: usize = usize::MAX;
    // parent[u] = (vertex that hands over, subset index handed to u)
    let mut parent = [(ROOT, 0usize); 64];
    let mut visited = 0u64;
    let mut queue = [0usize; 64];
    let (mut head, mut tail) = (0, 0);
    for v in members(eligible(subs[start])) {
        visited |= 1 << v;
        parent[v] = (ROOT, start);
        queue[tail] = v;
        tail += 1;
    }
    let mut end = None;
    'search: while head < tail {
        let v = queue[head];
        head += 1;
        for &t in &owned[v] {
            for u in members(eligible(subs[t]) & !visited) {
                visited |= 1 << u;
                parent[u] = (v, t);
                if quota[u] > 0 {
                    end = Some(u);
                    break 'search;
                }
                queue[tail] = u;
                tail += 1;
            }
        }
    }
    let Some(end) = end else {
        return Err(RealizeError::Infeasible {
            subset: subs[start],
        });
    };
    quota[end] -= 1;
    let mut cur = end;
    loop {
        let (prev, t) = parent[cur];
        losers[t] = cur;
        owned[cur].push(t);
        if prev == ROOT {
            break;
        }
        let pos = owned[prev]
            .iter()
            .position(|&x| x == t)
            .expect("chain subset is owned");
        owned[prev].swap_remove(pos);
        cur = prev;
    }
    Ok(())
}
