//! The gap abstraction of a partially occupied row.
//!
//! Once at least one seat is taken, the continuation count depends only on
//! the lengths of the maximal runs of empty seats, not on where they sit:
//! the two end runs (bounded by one occupied seat and an edge) and the
//! multiset of internal runs (bounded by occupied seats on both sides).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::Rule;
use crate::Error;

/// A partially occupied row, reduced to its empty-run structure.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GapState {
    left_end: u64,
    right_end: u64,
    /// run length -> multiplicity, lengths >= 1 only
    internal: BTreeMap<u64, u64>,
}

/// Names the run a candidate seat lies in. Runs of equal length are
/// interchangeable under the abstraction, so an internal run is identified
/// by its length alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GapRef {
    LeftEnd,
    RightEnd,
    Internal { len: u64 },
}

/// One seat the next person may legally take.
///
/// An end run offers its outermost seat at distance equal to the run length;
/// an internal run of length `L` offers its central seat at distance
/// `⌊(L-1)/2⌋ + 1`, twice when `L` is even.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub gap: GapRef,
    pub distance: u64,
    pub occupied_neighbors: u8,
}

impl GapState {
    /// Builds a state from explicit run lengths; zero-length internal
    /// entries are dropped.
    pub fn new(left_end: u64, internal: impl IntoIterator<Item = u64>, right_end: u64) -> Self {
        let mut state = GapState { left_end, right_end, internal: BTreeMap::new() };
        for len in internal {
            state.add_internal(len);
        }
        state
    }

    /// The state after the first person takes `seat` (1-based) on an empty
    /// row of `n` seats.
    pub fn first_move(n: u64, seat: u64) -> Self {
        assert!(1 <= seat && seat <= n, "seat inside 1..=n");
        Self::new(seat - 1, [], n - seat)
    }

    /// Reads the run structure off an occupancy vector. `None` when no seat
    /// is occupied (the abstraction needs at least one).
    pub fn from_occupancy(occupancy: &[bool]) -> Option<Self> {
        if !occupancy.iter().any(|&o| o) {
            return None;
        }
        let n = occupancy.len();
        let mut state = GapState::new(0, [], 0);
        let mut run = 0u64;
        let mut touches_left = true;
        for (s, &occupied) in occupancy.iter().enumerate() {
            if occupied {
                if touches_left {
                    state.left_end = run;
                } else {
                    state.add_internal(run);
                }
                run = 0;
                touches_left = false;
            } else {
                run += 1;
            }
            if s == n - 1 && !occupied {
                state.right_end = run;
            }
        }
        Some(state)
    }

    pub fn left_end(&self) -> u64 {
        self.left_end
    }

    pub fn right_end(&self) -> u64 {
        self.right_end
    }

    /// Internal run lengths with multiplicities, ascending.
    pub fn internal_runs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.internal.iter().map(|(&len, &mult)| (len, mult))
    }

    pub fn empty_seats(&self) -> u64 {
        let internal: u64 = self.internal.iter().map(|(len, mult)| len * mult).sum();
        self.left_end + self.right_end + internal
    }

    pub fn is_full(&self) -> bool {
        self.empty_seats() == 0
    }

    /// The same row read right-to-left.
    pub fn mirrored(&self) -> Self {
        GapState {
            left_end: self.right_end,
            right_end: self.left_end,
            internal: self.internal.clone(),
        }
    }

    /// The state after occupying the best seat of the given run.
    ///
    /// Taking the outermost seat of an end run of length `L` leaves an
    /// internal run of length `L - 1` and a zero end; taking a central seat
    /// of an internal run of length `L` leaves runs of lengths
    /// `(L-1)/2, (L-1)/2` (odd `L`) or `L/2 - 1, L/2` (even `L`, either
    /// central seat).
    pub fn occupy(&self, gap: GapRef) -> Self {
        let mut next = self.clone();
        match gap {
            GapRef::LeftEnd => {
                assert!(next.left_end > 0, "left end run is empty");
                let len = next.left_end;
                next.left_end = 0;
                next.add_internal(len - 1);
            }
            GapRef::RightEnd => {
                assert!(next.right_end > 0, "right end run is empty");
                let len = next.right_end;
                next.right_end = 0;
                next.add_internal(len - 1);
            }
            GapRef::Internal { len } => {
                next.remove_internal(len);
                if len % 2 == 1 {
                    next.add_internal((len - 1) / 2);
                    next.add_internal((len - 1) / 2);
                } else {
                    next.add_internal(len / 2 - 1);
                    next.add_internal(len / 2);
                }
            }
        }
        next
    }

    fn add_internal(&mut self, len: u64) {
        if len > 0 {
            *self.internal.entry(len).or_insert(0) += 1;
        }
    }

    fn remove_internal(&mut self, len: u64) {
        let mult = self.internal.get_mut(&len).expect("internal run of that length");
        *mult -= 1;
        if *mult == 0 {
            self.internal.remove(&len);
        }
    }
}

/// A group of interchangeable candidate seats: every seat of `gap` kind in
/// runs of one shape, all sharing distance and neighbor count.
pub(super) struct MoveClass {
    pub gap: GapRef,
    /// Length of the internal run this run behaves like. The edge mirrors an
    /// end run of length `L` into an internal run of length `2L - 1` whose
    /// center is the outermost seat; the best distance is `⌈len/2⌉` of this
    /// unfolded length for every run kind.
    pub unfolded_len: u64,
    pub seats: u64,
    pub distance: u64,
    pub occupied_neighbors: u8,
}

fn end_class(gap: GapRef, len: u64) -> MoveClass {
    MoveClass {
        gap,
        unfolded_len: 2 * len - 1,
        seats: 1,
        distance: len,
        occupied_neighbors: if len == 1 { 1 } else { 0 },
    }
}

fn internal_class(len: u64, mult: u64) -> MoveClass {
    MoveClass {
        gap: GapRef::Internal { len },
        unfolded_len: len,
        // two central seats per run of even length
        seats: if len.is_multiple_of(2) { 2 * mult } else { mult },
        distance: (len - 1) / 2 + 1,
        occupied_neighbors: match len {
            1 => 2,
            2 => 1,
            _ => 0,
        },
    }
}

/// The rule-legal moves, grouped by run shape.
pub(super) fn move_classes(state: &GapState, rule: Rule) -> Vec<MoveClass> {
    let mut classes = Vec::new();
    if state.left_end > 0 {
        classes.push(end_class(GapRef::LeftEnd, state.left_end));
    }
    if state.right_end > 0 {
        classes.push(end_class(GapRef::RightEnd, state.right_end));
    }
    for (len, mult) in state.internal_runs() {
        classes.push(internal_class(len, mult));
    }
    if classes.is_empty() {
        return classes;
    }
    if rule.longest_run {
        let longest = classes.iter().map(|c| c.unfolded_len).max().unwrap();
        classes.retain(|c| c.unfolded_len == longest);
    }
    let best = classes.iter().map(|c| c.distance).max().unwrap();
    classes.retain(|c| c.distance == best);
    if rule.fewest_neighbors {
        let fewest = classes.iter().map(|c| c.occupied_neighbors).min().unwrap();
        classes.retain(|c| c.occupied_neighbors == fewest);
    }
    classes
}

/// Every seat the next person may take under `rule`, one entry per seat.
///
/// Seats in interchangeable runs appear as repeated entries; the length of
/// the returned list is the number of concrete seat choices.
pub fn candidates(state: &GapState, rule: Rule) -> Result<Vec<Candidate>, Error> {
    if state.is_full() {
        return Err(Error::NoEmptySeats);
    }
    let mut seats = Vec::new();
    for class in move_classes(state, rule) {
        for _ in 0..class.seats {
            seats.push(Candidate {
                gap: class.gap,
                distance: class.distance,
                occupied_neighbors: class.occupied_neighbors,
            });
        }
    }
    Ok(seats)
}
