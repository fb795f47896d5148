//! Losing-score sequences of k-hypertournaments.
//!
//! A k-hypertournament on `n` vertices orients every k-subset of the vertex
//! set as an ordered tuple (an [`Arc`]); the last entry of the tuple is the
//! loser of that arc. This crate decides which non-decreasing integer
//! sequences arise as losing-score sequences ([`checker`]), builds explicit
//! witnesses for them ([`realizer`]), repairs a hypertournament towards a
//! prescribed per-vertex losing vector by local arc exchanges ([`exchange`]),
//! and cross-checks all of it against exhaustive enumeration ([`oracle`]).
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod binom;
pub mod checker;
pub mod error;
pub mod exchange;
pub mod generator;
pub mod model;
pub mod oracle;
pub mod realizer;
pub mod subset;

pub use binom::binom;
pub use checker::{
    check_losing_scores, check_losing_sequence, check_score_scores, check_score_sequence,
    dual_sequence, CheckReport, Verdict,
};
pub use error::{BinomOverflow, DualRangeError, EnvelopeError, ModelError};
pub use exchange::{
    apply_move, find_chain_move, find_direct_move, find_double_move, transform_to_target,
    ExchangeError, ExchangeMove, Transform,
};
pub use generator::{random_hypertournament, random_losing_sequence, Seed};
pub use model::{
    arc_swap, Arc, Hypertournament, LosingScoreSequence, ScoreSequence, Vertex, MAX_VERTICES,
};
pub use oracle::{
    all_losing_sequences_bruteforce, enumerate_valid_sequences, is_realizable_bruteforce,
    OracleError, SequenceSet, DEFAULT_BUDGET,
};
pub use realizer::{
    assign_losers, case_a_decompose, emit_arcs, realize, realize_recursive, CaseADecomposition,
    LoserAssignment, RealizeError, Strategy,
};
