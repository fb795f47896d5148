//! Error types shared across modules.

use core::fmt;

use crate::model::Vertex;

/// An exact binomial coefficient did not fit in 128 bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinomOverflow {
    pub p: u64,
    pub q: u64,
}

impl fmt::Display for BinomOverflow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({}, {}) overflows 128-bit arithmetic", self.p, self.q)
    }
}

impl core::error::Error for BinomOverflow {}

/// The request lies outside the supported size envelope
/// (`1 <= n <= 64`, `2 <= k <= 64`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnvelopeError {
    ArityTooSmall {
        k: usize,
    },
    ArityTooLarge {
        k: usize,
    },
    TooManyVertices {
        n: usize,
    },
    NoVertices,
    /// An operation that needs `n >= k` was handed a null configuration.
    NullHypertournament {
        n: usize,
        k: usize,
    },
}

impl fmt::Display for EnvelopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnvelopeError::ArityTooSmall { k } => write!(f, "arity k={k} must be at least 2"),
            EnvelopeError::ArityTooLarge { k } => write!(f, "arity k={k} exceeds 64"),
            EnvelopeError::TooManyVertices { n } => write!(f, "n={n} exceeds 64 vertices"),
            EnvelopeError::NoVertices => f.write_str("at least one vertex is required"),
            EnvelopeError::NullHypertournament { n, k } => {
                write!(
                    f,
                    "n={n} < k={k}: operation needs a non-null hypertournament"
                )
            }
        }
    }
}

impl core::error::Error for EnvelopeError {}

pub(crate) fn check_envelope(n: usize, k: usize) -> Result<(), EnvelopeError> {
    if k < 2 {
        Err(EnvelopeError::ArityTooSmall { k })
    } else if k > 64 {
        Err(EnvelopeError::ArityTooLarge { k })
    } else if n == 0 {
        Err(EnvelopeError::NoVertices)
    } else if n > 64 {
        Err(EnvelopeError::TooManyVertices { n })
    } else {
        Ok(())
    }
}

/// Structural problems with arcs, hypertournaments and score sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelError {
    Envelope(EnvelopeError),
    /// An arc has the wrong number of entries.
    WrongArcLength {
        expected: usize,
        found: usize,
    },
    /// A vertex id is not below `n`.
    VertexOutOfRange {
        vertex: Vertex,
        n: usize,
    },
    /// A vertex occurs twice in one arc.
    RepeatedVertex {
        vertex: Vertex,
    },
    /// Two arcs share the same underlying subset.
    DuplicateSubset {
        members: alloc::vec::Vec<Vertex>,
    },
    /// Fewer arcs than k-subsets.
    MissingSubsets {
        expected: usize,
        found: usize,
    },
    /// `arc_swap` was asked to exchange a vertex that is not in the arc.
    VertexNotInArc {
        vertex: Vertex,
    },
    /// A score sequence is not in non-decreasing order.
    NotSorted {
        index: usize,
    },
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::Envelope(e) => e.fmt(f),
            ModelError::WrongArcLength { expected, found } => {
                write!(f, "arc has {found} entries, expected {expected}")
            }
            ModelError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n={n}")
            }
            ModelError::RepeatedVertex { vertex } => write!(f, "vertex {vertex} repeated in arc"),
            ModelError::DuplicateSubset { members } => {
                f.write_str("subset appears twice:")?;
                for v in members {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            ModelError::MissingSubsets { expected, found } => {
                write!(f, "expected {expected} arcs, found {found}")
            }
            ModelError::VertexNotInArc { vertex } => write!(f, "vertex {vertex} not in arc"),
            ModelError::NotSorted { index } => {
                write!(f, "sequence decreases at position {}", index + 1)
            }
        }
    }
}

impl core::error::Error for ModelError {}

impl From<EnvelopeError> for ModelError {
    fn from(e: EnvelopeError) -> Self {
        ModelError::Envelope(e)
    }
}

/// A `dual_sequence` entry lies outside `[0, C(n-1, k-1)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualRangeError {
    pub index: usize,
    pub value: u64,
    pub bound: u64,
}

impl fmt::Display for DualRangeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "entry {} at position {} exceeds C(n-1,k-1) = {}",
            self.value,
            self.index + 1,
            self.bound
        )
    }
}

impl core::error::Error for DualRangeError {}
