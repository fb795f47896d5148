//! Local arc exchanges that move one unit of losing score between vertices.
//!
//! A *direct* move takes an arc containing both `x` and `y` in which `x` is
//! last and swaps the two, so `x` loses one arc fewer and `y` one more.
//!
//! A *double* move works through a (k-1)-set `W` avoiding `x` and `y`: the
//! arc on `W + x` ends in `x`, the arc on `W + y` ends in some `w` from `W`.
//! Swapping `y` with `w` in the second arc and `x` with `w` in the first
//! moves one loss from `x` to `y` while `w` loses one arc and gains another.
//!
//! Those two shapes do not always suffice when `r(x) <= r(y)`: with losers
//! `{012}->0, {013}->1, {023}->2, {123}->3` no direct or double move shifts a
//! loss from 2 to 1. A *chain* move generalizes both: a path
//! `x = v_0, v_1, .., v_m = y` with distinct arcs `e_i` ending in `v_{i-1}`
//! and containing `v_i`; swapping `v_{i-1}` and `v_i` in every `e_i` moves one
//! loss from `x` to `y` and leaves the inner vertices unchanged. Vertices
//! reachable from `x` this way are closed under losing (every arc they lose
//! lies inside the reachable set), so their losing scores sum to
//! `C(|S|, k)`; a valid target that lowers `x` must raise some vertex in the
//! same set, hence a chain to an under-scored vertex always exists.

use alloc::boxed::Box;
use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::binom::choose;
use crate::checker::{check_losing_scores, CheckReport};
use crate::model::{arc_swap, Arc, Hypertournament, Vertex};
use crate::subset::members;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExchangeMove {
    Direct {
        /// Current arc, with `over` last and `under` somewhere in it.
        arc: Arc,
        over: Vertex,
        under: Vertex,
    },
    Double {
        /// The shared (k-1)-set, as a bitmask.
        witness: u64,
        over: Vertex,
        under: Vertex,
        /// Last element of `under_arc`; its losing score is unchanged.
        pivot: Vertex,
        /// Current arc on `witness + over`, ending in `over`.
        over_arc: Arc,
        /// Current arc on `witness + under`, ending in `pivot`.
        under_arc: Arc,
    },
    Chain {
        /// `over`, the inner vertices, then `under`; all distinct.
        path: Vec<Vertex>,
        /// `arcs[i]` ends in `path[i]` and contains `path[i + 1]`.
        arcs: Vec<Arc>,
    },
}

impl ExchangeMove {
    /// The vertex whose losing score drops by one.
    pub fn over(&self) -> Vertex {
        match *self {
            ExchangeMove::Direct { over, .. } | ExchangeMove::Double { over, .. } => over,
            ExchangeMove::Chain { ref path, .. } => path[0],
        }
    }

    /// The vertex whose losing score rises by one.
    pub fn under(&self) -> Vertex {
        match *self {
            ExchangeMove::Direct { under, .. } | ExchangeMove::Double { under, .. } => under,
            ExchangeMove::Chain { ref path, .. } => path[path.len() - 1],
        }
    }

    pub fn pivot(&self) -> Option<Vertex> {
        match *self {
            ExchangeMove::Double { pivot, .. } => Some(pivot),
            _ => None,
        }
    }

    /// Vertices whose losing score the move touches but leaves unchanged.
    pub fn intermediates(&self) -> &[Vertex] {
        match self {
            ExchangeMove::Direct { .. } => &[],
            ExchangeMove::Double { pivot, .. } => core::slice::from_ref(pivot),
            ExchangeMove::Chain { path, .. } => &path[1..path.len() - 1],
        }
    }

    /// Whether the stored arcs still match `h` and the move's shape holds.
    pub fn is_applicable(&self, h: &Hypertournament) -> bool {
        match self {
            ExchangeMove::Direct { arc, over, under } => {
                over != under
                    && arc.loser() == *over
                    && arc.contains(*under)
                    && h.arc_on(arc.subset()) == Some(arc)
            }
            ExchangeMove::Double {
                witness,
                over,
                under,
                pivot,
                over_arc,
                under_arc,
            } => {
                let x = 1u64 << over;
                let y = 1u64 << under;
                witness & (x | y) == 0
                    && over_arc.subset() == witness | x
                    && under_arc.subset() == witness | y
                    && over_arc.loser() == *over
                    && under_arc.loser() == *pivot
                    && pivot != under
                    && h.arc_on(over_arc.subset()) == Some(over_arc)
                    && h.arc_on(under_arc.subset()) == Some(under_arc)
            }
            ExchangeMove::Chain { path, arcs } => {
                let mut seen = 0u64;
                let distinct_path = path.iter().all(|&v| {
                    let fresh = v < 64 && seen & (1 << v) == 0;
                    seen |= 1u64.checked_shl(v as u32).unwrap_or(0);
                    fresh
                });
                let distinct_arcs = arcs
                    .iter()
                    .enumerate()
                    .all(|(i, a)| arcs[..i].iter().all(|b| b.subset() != a.subset()));
                path.len() >= 2
                    && arcs.len() == path.len() - 1
                    && distinct_path
                    && distinct_arcs
                    && arcs.iter().enumerate().all(|(i, a)| {
                        a.loser() == path[i]
                            && a.contains(path[i + 1])
                            && h.arc_on(a.subset()) == Some(a)
                    })
            }
        }
    }
}

/// Text form used in move logs: `direct S x y`, `double W x y w` or
/// `chain P S_1 .. S_m`, where a subset is written as its ascending members
/// joined by commas and `P` is the vertex path `x,..,y`.
impl fmt::Display for ExchangeMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExchangeMove::Direct { arc, over, under } => {
                f.write_str("direct ")?;
                write_subset(f, arc.subset())?;
                write!(f, " {over} {under}")
            }
            ExchangeMove::Double {
                witness,
                over,
                under,
                pivot,
                ..
            } => {
                f.write_str("double ")?;
                write_subset(f, *witness)?;
                write!(f, " {over} {under} {pivot}")
            }
            ExchangeMove::Chain { path, arcs } => {
                f.write_str("chain ")?;
                for (i, v) in path.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                for a in arcs {
                    f.write_str(" ")?;
                    write_subset(f, a.subset())?;
                }
                Ok(())
            }
        }
    }
}

fn write_subset(f: &mut fmt::Formatter<'_>, s: u64) -> fmt::Result {
    for (i, v) in members(s).enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExchangeError {
    /// The move's arcs no longer match the hypertournament.
    StaleMove,
    /// The target has the wrong length, range or sum, or its sorted form
    /// fails the prefix check.
    InvalidTarget(TargetProblem),
    /// No move exists for any over/under pair. Must not happen for a valid
    /// target; carries the full state for diagnosis.
    Stuck {
        state: Box<Hypertournament>,
        current: Vec<u64>,
        target: Vec<u64>,
        moves_applied: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetProblem {
    Length {
        expected: usize,
        found: usize,
    },
    OutOfRange {
        vertex: Vertex,
        value: u64,
        bound: u64,
    },
    Check(CheckReport),
}

impl fmt::Display for ExchangeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExchangeError::StaleMove => f.write_str("move does not match the current arcs"),
            ExchangeError::InvalidTarget(TargetProblem::Length { expected, found }) => {
                write!(f, "target has {found} entries, expected {expected}")
            }
            ExchangeError::InvalidTarget(TargetProblem::OutOfRange {
                vertex,
                value,
                bound,
            }) => {
                write!(f, "target {value} for vertex {vertex} exceeds {bound}")
            }
            ExchangeError::InvalidTarget(TargetProblem::Check(report)) => {
                write!(f, "sorted target is not a losing-score sequence: {report}")
            }
            ExchangeError::Stuck {
                current,
                target,
                moves_applied,
                ..
            } => {
                write!(
                    f,
                    "no exchange move available after {moves_applied} moves; \
                     current {current:?}, target {target:?}"
                )
            }
        }
    }
}

impl core::error::Error for ExchangeError {}

/// First arc in canonical order containing `y` with `x` last.
pub fn find_direct_move(h: &Hypertournament, x: Vertex, y: Vertex) -> Option<ExchangeMove> {
    if x == y {
        return None;
    }
    h.arcs()
        .iter()
        .find(|a| a.loser() == x && a.contains(y))
        .map(|a| ExchangeMove::Direct {
            arc: a.clone(),
            over: x,
            under: y,
        })
}

/// First arc in canonical order ending in `x` whose other members `W` avoid
/// `y` and for which the arc on `W + y` does not end in `y`.
pub fn find_double_move(h: &Hypertournament, x: Vertex, y: Vertex) -> Option<ExchangeMove> {
    if x == y || y >= h.n() {
        return None;
    }
    let ybit = 1u64 << y;
    h.arcs().iter().filter(|a| a.loser() == x).find_map(|a| {
        let witness = a.subset() & !(1u64 << x);
        if witness & ybit != 0 {
            return None;
        }
        let other = h.arc_on(witness | ybit)?;
        let pivot = other.loser();
        (pivot != y).then(|| ExchangeMove::Double {
            witness,
            over: x,
            under: y,
            pivot,
            over_arc: a.clone(),
            under_arc: other.clone(),
        })
    })
}

/// Shortest chain move from `x` to `y`, searching breadth-first with
/// vertices and arcs visited in canonical order.
pub fn find_chain_move(h: &Hypertournament, x: Vertex, y: Vertex) -> Option<ExchangeMove> {
    if x == y || x >= h.n() || y >= h.n() {
        return None;
    }
    chain_to_any(h, x, 1u64 << y)
}

fn chain_to_any(h: &Hypertournament, x: Vertex, goals: u64) -> Option<ExchangeMove> {
    let n = h.n();
    let mut lost_by: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, a) in h.arcs().iter().enumerate() {
        lost_by[a.loser()].push(i);
    }
    let mut parent = [(usize::MAX, usize::MAX); 64];
    let mut visited = 1u64 << x;
    let mut queue = VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        for &ai in &lost_by[v] {
            for u in members(h.arcs()[ai].subset() & !visited) {
                visited |= 1 << u;
                parent[u] = (v, ai);
                if goals & (1 << u) != 0 {
                    let mut path = vec![u];
                    let mut arcs = Vec::new();
                    let mut cur = u;
                    while cur != x {
                        let (p, a) = parent[cur];
                        arcs.push(h.arcs()[a].clone());
                        path.push(p);
                        cur = p;
                    }
                    path.reverse();
                    arcs.reverse();
                    return Some(ExchangeMove::Chain { path, arcs });
                }
                queue.push_back(u);
            }
        }
    }
    None
}

/// Applies `mv` to a copy of `h`.
pub fn apply_move(
    h: &Hypertournament,
    mv: &ExchangeMove,
) -> Result<Hypertournament, ExchangeError> {
    if !mv.is_applicable(h) {
        return Err(ExchangeError::StaleMove);
    }
    let mut out = h.clone();
    let swap = |arc: &Arc, a, b| arc_swap(arc, a, b).expect("applicable move has both vertices");
    match mv {
        ExchangeMove::Direct { arc, over, under } => {
            replace(&mut out, swap(arc, *over, *under));
        }
        ExchangeMove::Double {
            over,
            under,
            pivot,
            over_arc,
            under_arc,
            ..
        } => {
            replace(&mut out, swap(under_arc, *under, *pivot));
            replace(&mut out, swap(over_arc, *over, *pivot));
        }
        ExchangeMove::Chain { path, arcs } => {
            for (i, a) in arcs.iter().enumerate() {
                replace(&mut out, swap(a, path[i], path[i + 1]));
            }
        }
    }
    Ok(out)
}

fn replace(h: &mut Hypertournament, arc: Arc) {
    let idx = h.arc_index(arc.subset()).expect("arc belongs to h");
    h.arcs_mut()[idx] = arc;
}

/// Result of [`transform_to_target`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transform {
    pub result: Hypertournament,
    pub log: Vec<ExchangeMove>,
}

/// Drives `h` to the per-vertex losing vector `target` using direct and
/// double moves.
///
/// Each step ranks over-scored vertices by current losing score (highest
/// first) and under-scored ones by current losing score (lowest first),
/// ties to the smaller id, and applies the first direct or double move found
/// for the first pair that has one. If no pair has either, the shortest
/// chain move from the first over-scored vertex to any under-scored vertex
/// is used. Every move lowers `sum_v |r(v) - target(v)|` by exactly two.
pub fn transform_to_target(
    h: &Hypertournament,
    target: &[u64],
) -> Result<Transform, ExchangeError> {
    validate_target(h, target)?;
    let mut cur = h.clone();
    let mut r = cur.losing_score_vector();
    let mut log = Vec::new();
    loop {
        let mut over: Vec<Vertex> = (0..h.n()).filter(|&v| r[v] > target[v]).collect();
        if over.is_empty() {
            return Ok(Transform { result: cur, log });
        }
        let mut under: Vec<Vertex> = (0..h.n()).filter(|&v| r[v] < target[v]).collect();
        over.sort_by_key(|&v| (core::cmp::Reverse(r[v]), v));
        under.sort_by_key(|&v| (r[v], v));

        let under_mask = under.iter().fold(0u64, |m, &v| m | (1 << v));
        let mv = over
            .iter()
            .find_map(|&x| {
                under.iter().find_map(|&y| {
                    find_direct_move(&cur, x, y).or_else(|| find_double_move(&cur, x, y))
                })
            })
            .or_else(|| over.iter().find_map(|&x| chain_to_any(&cur, x, under_mask)));
        let Some(mv) = mv else {
            return Err(ExchangeError::Stuck {
                state: Box::new(cur),
                current: r,
                target: target.to_vec(),
                moves_applied: log.len(),
            });
        };
        cur = apply_move(&cur, &mv)?;
        r[mv.over()] -= 1;
        r[mv.under()] += 1;
        log.push(mv);
    }
}

fn validate_target(h: &Hypertournament, target: &[u64]) -> Result<(), ExchangeError> {
    let bad = |p| Err(ExchangeError::InvalidTarget(p));
    if target.len() != h.n() {
        return bad(TargetProblem::Length {
            expected: h.n(),
            found: target.len(),
        });
    }
    let bound = h.arcs_per_vertex();
    if let Some((vertex, &value)) = target.iter().enumerate().find(|(_, &t)| t > bound) {
        return bad(TargetProblem::OutOfRange {
            vertex,
            value,
            bound,
        });
    }
    let mut sorted: Vec<i64> = target.iter().map(|&t| t as i64).collect();
    sorted.sort_unstable();
    let report = check_losing_scores(&sorted, h.k()).expect("hypertournament is in envelope");
    if !report.is_valid() {
        return bad(TargetProblem::Check(report));
    }
    debug_assert_eq!(target.iter().sum::<u64>(), choose(h.n(), h.k()));
    Ok(())
}
