//! Domain types: arcs, hypertournaments and score sequences.

use alloc::vec::Vec;
use core::fmt;

use crate::binom::choose;
use crate::error::{check_envelope, EnvelopeError, ModelError};
use crate::subset::{lex_rank, members, subset_count, subsets};

/// Vertex id, `0..n`.
pub type Vertex = usize;

/// Largest supported vertex count. Subsets are `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

/// An ordered tuple of distinct vertices. The last entry is the loser.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arc {
    entries: Vec<Vertex>,
}

impl Arc {
    /// Builds an arc, rejecting repeated vertices and ids `>= 64`.
    pub fn new(entries: Vec<Vertex>) -> Result<Arc, ModelError> {
        let mut seen = 0u64;
        for &v in &entries {
            if v >= MAX_VERTICES {
                return Err(ModelError::VertexOutOfRange {
                    vertex: v,
                    n: MAX_VERTICES,
                });
            }
            if seen & (1 << v) != 0 {
                return Err(ModelError::RepeatedVertex { vertex: v });
            }
            seen |= 1 << v;
        }
        if entries.is_empty() {
            return Err(ModelError::WrongArcLength {
                expected: 1,
                found: 0,
            });
        }
        Ok(Arc { entries })
    }

    /// The arc on `subset` whose non-losers appear in ascending order and
    /// whose last entry is `loser`.
    pub fn with_loser(subset: u64, loser: Vertex) -> Arc {
        debug_assert!(subset & (1 << loser) != 0);
        let mut entries: Vec<Vertex> = members(subset & !(1 << loser)).collect();
        entries.push(loser);
        Arc { entries }
    }

    pub fn entries(&self) -> &[Vertex] {
        &self.entries
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    pub fn loser(&self) -> Vertex {
        self.entries[self.entries.len() - 1]
    }

    /// Underlying vertex set as a bitmask.
    pub fn subset(&self) -> u64 {
        self.entries.iter().fold(0, |m, &v| m | (1 << v))
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.entries.contains(&v)
    }

    /// Copy of this arc with the positions of `a` and `b` exchanged.
    pub fn swapped(&self, a: Vertex, b: Vertex) -> Result<Arc, ModelError> {
        arc_swap(self, a, b)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Returns `e` with the positions of `a` and `b` interchanged.
pub fn arc_swap(e: &Arc, a: Vertex, b: Vertex) -> Result<Arc, ModelError> {
    let pa = position(e, a)?;
    let pb = position(e, b)?;
    let mut entries = e.entries.clone();
    entries.swap(pa, pb);
    Ok(Arc { entries })
}

fn position(e: &Arc, v: Vertex) -> Result<usize, ModelError> {
    e.entries
        .iter()
        .position(|&x| x == v)
        .ok_or(ModelError::VertexNotInArc { vertex: v })
}

/// A complete k-hypertournament: exactly one arc per k-subset of
/// `{0..n-1}`, kept in lexicographic subset order. For `n < k` the arc set
/// is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypertournament {
    n: usize,
    k: usize,
    arcs: Vec<Arc>,
}

impl Hypertournament {
    /// Validates `arcs` and stores them in canonical order. The input may be
    /// in any order.
    pub fn new(n: usize, k: usize, arcs: Vec<Arc>) -> Result<Self, ModelError> {
        check_envelope(n, k)?;
        let expected = subset_count(n, k);
        let mut slots: Vec<Option<Arc>> = (0..expected).map(|_| None).collect();
        let mut found = 0usize;
        for arc in arcs {
            if arc.arity() != k {
                return Err(ModelError::WrongArcLength {
                    expected: k,
                    found: arc.arity(),
                });
            }
            if let Some(&v) = arc.entries.iter().find(|&&v| v >= n) {
                return Err(ModelError::VertexOutOfRange { vertex: v, n });
            }
            let slot = &mut slots[lex_rank(arc.subset(), n, k)];
            if slot.is_some() {
                return Err(ModelError::DuplicateSubset {
                    members: members(arc.subset()).collect(),
                });
            }
            *slot = Some(arc);
            found += 1;
        }
        if found != expected {
            return Err(ModelError::MissingSubsets { expected, found });
        }
        Ok(Hypertournament {
            n,
            k,
            arcs: slots.into_iter().flatten().collect(),
        })
    }

    /// The arc-free hypertournament for `n < k`.
    pub fn null(n: usize, k: usize) -> Result<Self, EnvelopeError> {
        check_envelope(n, k)?;
        if n >= k {
            return Err(EnvelopeError::NullHypertournament { n, k });
        }
        Ok(Hypertournament {
            n,
            k,
            arcs: Vec::new(),
        })
    }

    /// Builds the hypertournament whose arc on the `i`-th subset (canonical
    /// order) has loser `losers[i]` and ascending non-losers.
    pub(crate) fn from_losers(n: usize, k: usize, losers: &[Vertex]) -> Self {
        debug_assert_eq!(losers.len(), subset_count(n, k));
        let arcs = subsets(n, k)
            .zip(losers)
            .map(|(s, &l)| Arc::with_loser(s, l))
            .collect();
        Hypertournament { n, k, arcs }
    }

    /// Wraps arcs already known to be canonical.
    pub(crate) fn from_canonical(n: usize, k: usize, arcs: Vec<Arc>) -> Self {
        Hypertournament { n, k, arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn is_null(&self) -> bool {
        self.n < self.k
    }

    /// Index of the arc on `subset`, if `subset` is a k-subset of the vertex set.
    pub fn arc_index(&self, subset: u64) -> Option<usize> {
        let in_range = subset & !crate::subset::full_mask(self.n) == 0;
        if !in_range || subset.count_ones() as usize != self.k || self.is_null() {
            return None;
        }
        Some(lex_rank(subset, self.n, self.k))
    }

    /// The arc on `subset`.
    pub fn arc_on(&self, subset: u64) -> Option<&Arc> {
        self.arc_index(subset).map(|i| &self.arcs[i])
    }

    pub(crate) fn arcs_mut(&mut self) -> &mut [Arc] {
        &mut self.arcs
    }

    /// Number of arcs each vertex loses, indexed by vertex.
    pub fn losing_score_vector(&self) -> Vec<u64> {
        let mut r = alloc::vec![0u64; self.n];
        for arc in &self.arcs {
            r[arc.loser()] += 1;
        }
        r
    }

    /// Number of arcs each vertex belongs to without being last.
    pub fn score_vector(&self) -> Vec<u64> {
        let per_vertex = self.arcs_per_vertex();
        self.losing_score_vector()
            .into_iter()
            .map(|r| per_vertex - r)
            .collect()
    }

    /// `C(n-1, k-1)`: every vertex lies in this many arcs.
    pub fn arcs_per_vertex(&self) -> u64 {
        if self.n == 0 {
            0
        } else {
            choose(self.n - 1, self.k - 1)
        }
    }

    /// Sorted losing scores.
    pub fn losing_score_sequence(&self) -> LosingScoreSequence {
        let mut scores = self.losing_score_vector();
        scores.sort_unstable();
        LosingScoreSequence { k: self.k, scores }
    }

    /// Sub-hypertournament induced on `vertices`, relabelled so that
    /// `vertices[i]` becomes vertex `i`. Arc entry order is preserved.
    pub fn induced(&self, vertices: &[Vertex]) -> Result<Self, ModelError> {
        let m = vertices.len();
        check_envelope(m, self.k)?;
        let mut relabel = [usize::MAX; MAX_VERTICES];
        let mut mask = 0u64;
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(ModelError::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            if relabel[v] != usize::MAX {
                return Err(ModelError::RepeatedVertex { vertex: v });
            }
            relabel[v] = i;
            mask |= 1 << v;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|a| a.subset() & !mask == 0)
            .map(|a| Arc {
                entries: a.entries.iter().map(|&v| relabel[v]).collect(),
            })
            .collect();
        Hypertournament::new(m, self.k, arcs)
    }
}

/// A non-decreasing sequence of losing scores together with its arity.
///
/// Construction only checks the shape (envelope and ordering); whether the
/// sequence is realizable is the job of [`crate::checker`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LosingScoreSequence {
    k: usize,
    scores: Vec<u64>,
}

impl LosingScoreSequence {
    pub fn new(k: usize, scores: Vec<u64>) -> Result<Self, ModelError> {
        check_envelope(scores.len(), k)?;
        check_sorted(&scores)?;
        Ok(LosingScoreSequence { k, scores })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.scores.len()
    }

    pub fn scores(&self) -> &[u64] {
        &self.scores
    }

    pub fn into_scores(self) -> Vec<u64> {
        self.scores
    }
}

/// A non-decreasing sequence of (winning) scores together with its arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScoreSequence {
    k: usize,
    scores: Vec<u64>,
}

impl ScoreSequence {
    pub fn new(k: usize, scores: Vec<u64>) -> Result<Self, ModelError> {
        check_envelope(scores.len(), k)?;
        check_sorted(&scores)?;
        Ok(ScoreSequence { k, scores })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.scores.len()
    }

    pub fn scores(&self) -> &[u64] {
        &self.scores
    }
}

fn check_sorted(scores: &[u64]) -> Result<(), ModelError> {
    match scores.windows(2).position(|w| w[0] > w[1]) {
        Some(i) => Err(ModelError::NotSorted { index: i + 1 }),
        None => Ok(()),
    }
}
