//! Seeded random hypertournaments.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{check_envelope, EnvelopeError};
use crate::model::{Arc, Hypertournament, LosingScoreSequence, Vertex};
use crate::subset::{members, subsets};

/// Seed for the deterministic generator. The same seed and parameters give
/// the same output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Seed(pub u64);

impl From<u64> for Seed {
    fn from(v: u64) -> Self {
        Seed(v)
    }
}

/// Orients every k-subset, in canonical order, by an independent uniform
/// shuffle of its members.
pub fn random_hypertournament(
    n: usize,
    k: usize,
    seed: Seed,
) -> Result<Hypertournament, EnvelopeError> {
    check_envelope(n, k)?;
    if n < k {
        return Err(EnvelopeError::NullHypertournament { n, k });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    let arcs = subsets(n, k)
        .map(|s| {
            let mut entries: Vec<Vertex> = members(s).collect();
            entries.shuffle(&mut rng);
            Arc::new(entries).expect("subset members are distinct")
        })
        .collect();
    Ok(Hypertournament::from_canonical(n, k, arcs))
}

/// Sorted losing scores of [`random_hypertournament`].
pub fn random_losing_sequence(
    n: usize,
    k: usize,
    seed: Seed,
) -> Result<LosingScoreSequence, EnvelopeError> {
    Ok(random_hypertournament(n, k, seed)?.losing_score_sequence())
}
