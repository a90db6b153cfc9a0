//! Sequence counts assembled from the closed forms `b` and `d`.
//!
//! Every formula here follows the same shape: the first person takes seat
//! `i`, which splits the row into two independent sub-rows of `i` and
//! `n + 1 - i` seats (each with its first person at an end), and the people
//! arriving at distance `j` contribute a factorial of `b(i, j) + b(n+1-i, j)`
//! choices of order, times a power of two for the pair choices counted by
//! `d`. The variants differ only in how the tie-break filters of their rules
//! reshape the per-distance factor.

use crate::closed_form::{b, d};
use crate::{BigCount, Error, Factorials};

fn bb(i: u64, mirror: u64, j: u64) -> u64 {
    b(i, j) + b(mirror, j)
}

fn dd(i: u64, mirror: u64, j: u64) -> u64 {
    d(i, j) + d(mirror, j)
}

/// `2^dd · dd! · (bb - dd)!`: one seat of each of the `dd` pairs is taken
/// first (two choices per pair, in any order), then the remaining seats of
/// that distance in any order. This is the per-distance factor of the
/// longest-run-first rules.
fn pairs_first(bb: u64, dd: u64, fact: &mut Factorials) -> BigCount {
    debug_assert!(dd <= bb);
    let mut t = fact.get(dd).clone();
    t *= fact.get(bb - dd);
    t << dd
}

/// The exponent of 2 for distance `j` in the plain count.
///
/// The plain rule fixes `d(p, 1) = 0`: the two central seats of a length-2
/// run are not an independent binary choice, because their orderings are
/// already counted among the `(b(i,1) + b(n+1-i,1))!` arrangements of the
/// distance-1 arrivals. The rule-variant formulas use the true value
/// instead; mixing the conventions up changes a(6) from 48 to 96.
fn plain_pair_exponent(i: u64, mirror: u64, j: u64) -> u64 {
    if j == 1 {
        0
    } else {
        dd(i, mirror, j)
    }
}

fn plain_summand(n: u64, i: u64, fact: &mut Factorials) -> BigCount {
    let mirror = n + 1 - i;
    let mut term = BigCount::from(1u32);
    for j in 1..n {
        term *= fact.get(bb(i, mirror, j));
        term <<= plain_pair_exponent(i, mirror, j);
    }
    term
}

/// Number of distinct seating sequences of `n` people on `n` seats under the
/// plain politeness rule.
///
/// `a(n) = Σ_{i=1..n} ∏_{j=1..n-1} 2^(d(i,j)+d(n+1-i,j)) · (b(i,j)+b(n+1-i,j))!`
/// with the distance-1 exponent forced to zero (see `plain_pair_exponent`
/// for why). The empty product makes `a(1) = 1`.
pub fn a(n: u64) -> BigCount {
    assert!(n >= 1, "seat count starts at 1");
    let mut fact = Factorials::new();
    let mut total = BigCount::from(0u32);
    for i in 1..=n {
        total += plain_summand(n, i, &mut fact);
    }
    total
}

/// A166079: seats occupied when the process first forces someone to
/// distance 1, i.e. `n - b(n, 1)`.
pub fn a166079(n: u64) -> BigCount {
    assert!(n >= 1, "seat count starts at 1");
    BigCount::from(n - b(n, 1))
}

/// A095236: sequence count when each person must also pick a run of maximal
/// length. Uses the true `d` values at every distance, including 1.
pub fn a095236(n: u64) -> BigCount {
    assert!(n >= 1, "seat count starts at 1");
    let mut fact = Factorials::new();
    let mut total = BigCount::from(0u32);
    for i in 1..=n {
        total += longest_run_summand(n, i, &mut fact);
    }
    total
}

fn longest_run_summand(n: u64, i: u64, fact: &mut Factorials) -> BigCount {
    let mirror = n + 1 - i;
    let mut term = BigCount::from(1u32);
    for j in 1..n {
        term *= pairs_first(bb(i, mirror, j), dd(i, mirror, j), fact);
    }
    term
}

/// A095240: the `i = 1` and `i = n` cases of [`a095236`], i.e. the first
/// person starts at an end of the row. Defined for `n >= 2`.
pub fn a095240(n: u64) -> Result<BigCount, Error> {
    if n < 2 {
        return Err(Error::BelowMinimum { what: "a095240", value: n, min: 2 });
    }
    let mut fact = Factorials::new();
    let mut term = BigCount::from(2u32);
    for j in 1..n {
        term *= pairs_first(b(n, j), d(n, j), &mut fact);
    }
    Ok(term)
}

/// A095912: the longest-run rule of [`a095236`] sharpened so that, among
/// distance-1 seats, those next to a single occupied seat go first. The
/// extra rule only bites once a `OXOX` end pattern can occur, so values
/// below `n = 4` coincide with A095236.
pub fn a095912(n: u64) -> BigCount {
    assert!(n >= 1, "seat count starts at 1");
    if n < 4 {
        return a095236(n);
    }
    let mut fact = Factorials::new();
    // i in {1, 2, n-1, n}: one sub-row is empty or a single seat, and the
    // end seat at distance 1 is taken right after the pair picks.
    let mut edge = BigCount::from(0u32);
    for i in [n - 1, n] {
        let mut term = BigCount::from(1u32);
        for j in 1..n {
            term *= pairs_first(b(i, j), d(i, j), &mut fact);
        }
        edge += term;
    }
    let mut total = edge * 2u32;
    for i in 3..=n - 2 {
        total += longest_run_summand(n, i, &mut fact);
    }
    total
}

/// Sequence count under the extended politeness rule: maximize the distance,
/// then prefer seats with the fewest occupied neighbors. Inert below
/// `n = 4`, where it equals [`a`].
pub fn a_extended(n: u64) -> BigCount {
    assert!(n >= 1, "seat count starts at 1");
    if n < 4 {
        return a(n);
    }
    let mut fact = Factorials::new();

    // Distances >= 2 behave exactly as in the plain count.
    let tail = |i: u64, mirror: u64, fact: &mut Factorials| -> BigCount {
        let mut term = BigCount::from(1u32);
        for j in 2..n {
            term *= fact.get(bb(i, mirror, j));
            term <<= dd(i, mirror, j);
        }
        term
    };

    // i in {1, n}: everything at distance 1 sits inside one sub-row.
    let mut total = pairs_first(b(n, 1), d(n, 1), &mut fact) * tail(n, 1, &mut fact) * 2u32;

    // i in {2, n-1}: the lone end seat joins the pair seats up front, which
    // turns the dd! ordering into (dd + 1)!.
    let (b1, d1) = (b(n - 1, 1), d(n - 1, 1));
    let mut near_edge = fact.get(d1 + 1).clone();
    near_edge *= fact.get(b1 - d1);
    near_edge <<= d1;
    total += near_edge * tail(n - 1, 2, &mut fact) * 2u32;

    for i in 3..=n - 2 {
        let mirror = n + 1 - i;
        total += pairs_first(bb(i, mirror, 1), dd(i, mirror, 1), &mut fact)
            * tail(i, mirror, &mut fact);
    }
    total
}
