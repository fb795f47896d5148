//! Exact binomial coefficients.

use crate::error::BinomOverflow;

/// `C(p, q)`, with `C(p, q) = 0` whenever `q > p`.
///
/// The product is accumulated in `u128` with the running gcd divided out
/// before each multiplication, so every intermediate value stays below the
/// final result times `q`. Anything that still does not fit is reported as
/// [`BinomOverflow`] instead of wrapping.
pub fn binom(p: u64, q: u64) -> Result<u128, BinomOverflow> {
    if q > p {
        return Ok(0);
    }
    let q = q.min(p - q);
    let base = (p - q) as u128;
    let mut acc: u128 = 1;
    for i in 1..=q as u128 {
        // acc = C(base + i - 1, i - 1); acc * (base + i) is divisible by i.
        let g = gcd(acc, i);
        let factor = (base + i) / (i / g);
        acc = (acc / g)
            .checked_mul(factor)
            .ok_or(BinomOverflow { p, q })?;
    }
    Ok(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

const PASCAL_ROWS: usize = 65;

const fn build_pascal() -> [[u64; PASCAL_ROWS]; PASCAL_ROWS] {
    let mut t = [[0u64; PASCAL_ROWS]; PASCAL_ROWS];
    let mut p = 0;
    while p < PASCAL_ROWS {
        t[p][0] = 1;
        let mut q = 1;
        while q <= p {
            t[p][q] = t[p - 1][q - 1] + t[p - 1][q];
            q += 1;
        }
        p += 1;
    }
    t
}

/// Pascal's triangle up to row 64; every entry fits in `u64`.
static PASCAL: [[u64; PASCAL_ROWS]; PASCAL_ROWS] = build_pascal();

/// Table lookup for the supported envelope (`p <= 64`).
///
/// Panics if `p > 64`; callers validate the envelope first.
#[inline]
pub(crate) fn choose(p: usize, q: usize) -> u64 {
    if q > p {
        0
    } else {
        PASCAL[p][q]
    }
}
