//! Closed forms for the per-distance counts of the seating process.
//!
//! Fix `p` seats and let the first person take the leftmost seat. As the
//! remaining `p - 1` people fill the row under the politeness rule,
//!
//! * `b(p, k)` counts the people who sit down at distance exactly `k` from
//!   the nearest occupied seat, and
//! * `d(p, k)` counts the distinct pairs of adjacent seats that at some
//!   moment both offer distance exactly `k` (the binary choices between two
//!   central seats of an even-length run).
//!
//! Both are piecewise linear in `p` over the dyadic intervals
//! `[1 + 2^m·2k, 1 + 2^(m+1)·2k)` (for `k >= 2`; base `3` instead of `2k`
//! for `k = 1`). The dyadic index `m` is computed by integer doubling only:
//! a floating-point `⌊log2⌋` misclassifies the interval boundaries
//! `p = 1 + 2^m·2k` once `m` is large.
//!
//! The functions here mirror the case analysis one-to-one instead of merging
//! cases, so each branch can be audited against its derivation.

// the zero cases stay separate branches instead of saturating arithmetic
#![allow(clippy::implicit_saturating_sub)]

use crate::Error;

/// A distance query `(p, k)` together with its dyadic index, when defined.
///
/// `m` is present exactly when the query falls into the dyadic regime:
/// `k >= 2, p >= 1 + 2k`, or `k = 1, p >= 4`. The small-`p` cases ahead of
/// the dyadic intervals carry no index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceQuery {
    pub p: u64,
    pub k: u64,
    pub m: Option<u32>,
}

impl DistanceQuery {
    /// Classifies `(p, k)`, computing `m` where it is defined.
    pub fn new(p: u64, k: u64) -> Self {
        assert!(p >= 1 && k >= 1, "seat count and distance start at 1");
        let m = if k >= 2 {
            m_index_general(p, k).ok()
        } else {
            m_index_one(p).ok()
        };
        Self { p, k, m }
    }
}

/// The unique `m >= 0` with `t·2^m <= x < t·2^(m+1)`, for `x >= t >= 1`.
fn dyadic_index(x: u64, t: u64) -> u32 {
    debug_assert!(t >= 1 && x >= t);
    let mut m = 0u32;
    let mut bound = t;
    // bound <= x/2 implies bound*2 <= x, so the doubling cannot overflow.
    while bound <= x / 2 {
        bound *= 2;
        m += 1;
    }
    debug_assert!(bound <= x && (x / 2 < bound));
    m
}

/// Dyadic index `m = ⌊log2((p-1) / 2k)⌋` for distances `k >= 2`.
///
/// Defined for `p >= 1 + 2k`; the result satisfies
/// `2^m·2k <= p - 1 < 2^(m+1)·2k` exactly.
pub fn m_index_general(p: u64, k: u64) -> Result<u32, Error> {
    if k < 2 || p < 1 + 2 * k {
        return Err(Error::MIndexDomain { p, k });
    }
    Ok(dyadic_index(p - 1, 2 * k))
}

/// Dyadic index `m = ⌊log2((p-1) / 3)⌋` for distance 1.
///
/// Defined for `p >= 4`; the result satisfies `2^m·3 <= p - 1 < 2^(m+1)·3`
/// exactly.
pub fn m_index_one(p: u64) -> Result<u32, Error> {
    if p < 4 {
        return Err(Error::MIndexOneDomain { p });
    }
    Ok(dyadic_index(p - 1, 3))
}

/// Number of people seated at distance exactly `k` on a row of `p` seats,
/// first person leftmost.
///
/// Total in `p >= 1`, `k >= 1`; queries with `k >= p` fall into the first
/// case and return 0, which keeps table emitters total.
pub fn b(p: u64, k: u64) -> u64 {
    assert!(p >= 1 && k >= 1, "seat count and distance start at 1");
    if k == 1 {
        b_one(p)
    } else {
        b_general(p, k)
    }
}

fn b_general(p: u64, k: u64) -> u64 {
    debug_assert!(k >= 2);
    // Explicit early cases before the dyadic regime starts at p = 1 + 2k.
    if p < k + 1 {
        return 0;
    }
    if p == k + 1 {
        return 1;
    }
    if p < 1 + 2 * k {
        return 0;
    }
    let m = dyadic_index(p - 1, 2 * k);
    let pow = 1u64 << m;
    let (p, k, pow) = (p as u128, k as u128, pow as u128);
    let plateau_end = 1 + pow * (2 * k + 1);
    let decline_end = 1 + pow * (2 * k + 2);
    let gap_end = 1 + pow * (4 * k - 2);
    let value = if p <= plateau_end {
        pow
    } else if p <= decline_end {
        decline_end - p
    } else if p <= gap_end {
        0
    } else {
        // gap_end < p < 1 + 2^(m+1)·2k
        p - gap_end
    };
    value as u64
}

fn b_one(p: u64) -> u64 {
    match p {
        1 => 0,
        2 | 3 => 1,
        _ => {
            let m = dyadic_index(p - 1, 3);
            let pow = 1u64 << m;
            if p as u128 <= 1 + pow as u128 * 4 {
                pow * 2
            } else {
                // 1 + 2^m·4 < p < 1 + 2^(m+1)·3
                p - 1 - pow * 2
            }
        }
    }
}

/// Number of distinct adjacent-seat pairs that at some moment both carry
/// distance exactly `k`, on a row of `p` seats with the first person
/// leftmost.
pub fn d(p: u64, k: u64) -> u64 {
    assert!(p >= 1 && k >= 1, "seat count and distance start at 1");
    if k == 1 {
        d_one(p)
    } else {
        d_general(p, k)
    }
}

fn d_general(p: u64, k: u64) -> u64 {
    debug_assert!(k >= 2);
    if p < 1 + 2 * k {
        return 0;
    }
    let m = dyadic_index(p - 1, 2 * k);
    let pow = 1u64 << m;
    let (p, k, pow) = (p as u128, k as u128, pow as u128);
    let interval_start = 1 + pow * 2 * k;
    let plateau_end = 1 + pow * (2 * k + 1);
    let decline_end = 1 + pow * (2 * k + 2);
    let value = if p <= plateau_end {
        p - interval_start
    } else if p <= decline_end {
        decline_end - p
    } else {
        0
    };
    value as u64
}

fn d_one(p: u64) -> u64 {
    if p < 4 {
        return 0;
    }
    let m = dyadic_index(p - 1, 3);
    let peak = 1 + (1u128 << m) * 4;
    if p as u128 <= peak {
        (peak - p as u128) as u64
    } else {
        // peak < p < 1 + 2^(m+1)·3
        (p as u128 - peak) as u64
    }
}
