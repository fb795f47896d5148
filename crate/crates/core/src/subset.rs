//! k-subsets of `{0, .., n-1}` as `u64` bitmasks, in lexicographic order.
//!
//! Lexicographic order compares the ascending member lists, so for
//! `n = 4, k = 3` the order is `{0,1,2} {0,1,3} {0,2,3} {1,2,3}`. Every
//! [`Hypertournament`](crate::Hypertournament) stores its arcs in this order,
//! and [`lex_rank`] turns a subset into its arc index.

use crate::binom::choose;
use crate::model::Vertex;

/// Number of k-subsets of an n-set, for `n <= 64`.
#[inline]
pub fn subset_count(n: usize, k: usize) -> usize {
    choose(n, k) as usize
}

/// Bitmask with bits `0..n` set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Members of `mask` in ascending order.
#[inline]
pub fn members(mut mask: u64) -> impl Iterator<Item = Vertex> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as Vertex;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Position of the k-subset `mask` of `{0..n-1}` in lexicographic order.
///
/// Uses `rank = C(n,k) - 1 - sum_i C(n-1-c_i, k-i)` over the ascending
/// members `c_0 < c_1 < ... < c_{k-1}`.
pub fn lex_rank(mask: u64, n: usize, k: usize) -> usize {
    debug_assert_eq!(mask.count_ones() as usize, k);
    debug_assert_eq!(mask & !full_mask(n), 0);
    let tail: u64 = members(mask)
        .enumerate()
        .map(|(i, c)| choose(n - 1 - c, k - i))
        .sum();
    (choose(n, k) - 1 - tail) as usize
}

/// Iterator over all k-subsets of `{0..n-1}` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Subsets {
    n: usize,
    idx: [u8; 64],
    k: usize,
    done: bool,
}

/// All k-subsets of `{0..n-1}`, lexicographically. Empty when `k > n`;
/// a single empty set when `k == 0`.
pub fn subsets(n: usize, k: usize) -> Subsets {
    debug_assert!(n <= 64);
    let mut idx = [0u8; 64];
    for (i, slot) in idx.iter_mut().enumerate().take(k.min(64)) {
        *slot = i as u8;
    }
    Subsets {
        n,
        idx,
        k,
        done: k > n,
    }
}

impl Iterator for Subsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let k = self.k;
        let mask = self.idx[..k].iter().fold(0u64, |m, &c| m | (1u64 << c));
        // advance: rightmost position that can still move right
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if (self.idx[i] as usize) < self.n - k + i {
                self.idx[i] += 1;
                for t in i + 1..k {
                    self.idx[t] = self.idx[t - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    }
}
