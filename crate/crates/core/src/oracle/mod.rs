//! Brute-force ground truth for the seating process.
//!
//! Everything in this module counts or simulates by actually playing the
//! process, with no reliance on the closed forms it is used to check. Two
//! independent engines coexist:
//!
//! * a memoized counter over [`GapState`] abstractions, fast enough for rows
//!   of 60+ seats, and
//! * a naive enumerator and trajectory simulator over explicit occupancy
//!   vectors, used to validate the abstraction itself on small rows.

mod explicit;
mod gaps;

use alloc::collections::BTreeMap;

use crate::{BigCount, Error};

pub use explicit::{
    b_census, count_sequences_naive, d_census, is_reachable, verify_census_invariance,
    CensusTable, INVARIANCE_CAP, NAIVE_CAP,
};
pub use gaps::{candidates, Candidate, GapRef, GapState};

/// Which politeness rule governs the simulator.
///
/// Both filters are applied on top of the distance-maximizing base rule;
/// the first person on an empty row may take any seat under every variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rule {
    /// Keep only seats inside runs of maximal unfolded length, before
    /// comparing distances. An end run of length `L` counts as the internal
    /// run of length `2L - 1` the edge mirrors it into, so it ties with the
    /// odd internal runs offering the same best distance; even runs (whose
    /// two central seats form a pair) outrank both and are entered first.
    pub longest_run: bool,
    /// Among the maximal-distance seats, keep those with the fewest occupied
    /// neighbors.
    pub fewest_neighbors: bool,
}

impl Rule {
    /// Maximal distance only; counts `a(n)`.
    pub const PLAIN: Rule = Rule { longest_run: false, fewest_neighbors: false };
    /// Longest run first; counts A095236.
    pub const LONGEST_RUN: Rule = Rule { longest_run: true, fewest_neighbors: false };
    /// Neighbor tie-break only; counts the extended-rule sequence.
    pub const FEWEST_NEIGHBORS: Rule = Rule { longest_run: false, fewest_neighbors: true };
    /// Both filters; counts A095912.
    pub const LONGEST_RUN_FEWEST_NEIGHBORS: Rule =
        Rule { longest_run: true, fewest_neighbors: true };

    /// All four variants, in a fixed sweep order.
    pub const ALL: [Rule; 4] = [
        Rule::PLAIN,
        Rule::LONGEST_RUN,
        Rule::FEWEST_NEIGHBORS,
        Rule::LONGEST_RUN_FEWEST_NEIGHBORS,
    ];

    pub fn label(self) -> &'static str {
        match (self.longest_run, self.fewest_neighbors) {
            (false, false) => "plain",
            (true, false) => "longest-run",
            (false, true) => "fewest-neighbors",
            (true, true) => "longest-run+fewest-neighbors",
        }
    }
}

/// Number of distinct full seating sequences on `n` seats under `rule`.
///
/// The first person may take any of the `n` seats; from there the count
/// depends only on the gap state, so the recursion is memoized on it. A run
/// length with multiplicity `c` contributes a factor `c`, and an even
/// internal run a further factor 2 for its two central seats, which lead to
/// the same successor state.
pub fn count_sequences(n: u64, rule: Rule) -> BigCount {
    assert!(n >= 1, "seat count starts at 1");
    let mut memo = BTreeMap::new();
    let mut total = BigCount::from(0u32);
    for seat in 1..=n {
        total += count_rec(&GapState::first_move(n, seat), rule, &mut memo);
    }
    total
}

/// Number of ways to finish the process from an arbitrary mid-process state.
pub fn count_continuations(state: &GapState, rule: Rule) -> BigCount {
    count_rec(state, rule, &mut BTreeMap::new())
}

/// Number of sequences whose first move is seat `i` (1-based).
pub fn count_sequences_first_at(n: u64, i: u64, rule: Rule) -> Result<BigCount, Error> {
    if i < 1 || i > n {
        return Err(Error::FirstSeatOutOfRange { n, seat: i });
    }
    Ok(count_continuations(&GapState::first_move(n, i), rule))
}

fn count_rec(
    state: &GapState,
    rule: Rule,
    memo: &mut BTreeMap<GapState, BigCount>,
) -> BigCount {
    if state.is_full() {
        return BigCount::from(1u32);
    }
    if let Some(cached) = memo.get(state) {
        return cached.clone();
    }
    let mut total = BigCount::from(0u32);
    for class in gaps::move_classes(state, rule) {
        total += count_rec(&state.occupy(class.gap), rule, memo) * class.seats;
    }
    memo.insert(state.clone(), total.clone());
    total
}
