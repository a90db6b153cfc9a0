//! Round-robin insertion orders over `2^i` runs.
//!
//! Growing a reachable configuration by one seat must not retroactively
//! break the politeness of the seats already taken. When the row holds `2^h`
//! runs of equal length, inserting into the runs in the order given by the
//! tuple `S_{2^h}` keeps every intermediate configuration reachable. The
//! tuples satisfy `S_2 = (1; 2)` and double by
//! `s_{2^(i+1), c} = 2·s_{2^i, c} - 1` for `c <= 2^i`, else
//! `2·s_{2^i, c - 2^i}` — the bit-reversal permutation, though the
//! generator follows the doubling recursion directly.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::oracle::is_reachable;
use crate::Error;

/// Largest tuple level the generator accepts (`2^20` entries).
pub const MAX_LEVEL: u32 = 20;

/// The insertion order `S_{2^i}`: a permutation of `1..=2^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemaTuple {
    level: u32,
    entries: Vec<u64>,
}

impl SchemaTuple {
    pub fn level(&self) -> u32 {
        self.level
    }

    /// The run numbers in insertion order, 1-based.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for SchemaTuple {
    /// Semicolon-separated entries: `1;3;2;4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, entry) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{entry}")?;
        }
        Ok(())
    }
}

/// Builds `S_{2^level}` by the doubling recursion from `S_2 = (1; 2)`.
pub fn schema_tuple(level: u32) -> Result<SchemaTuple, Error> {
    assert!(level >= 1, "levels start at 1");
    if level > MAX_LEVEL {
        return Err(Error::AboveCap {
            what: "schema_tuple level",
            value: level as u64,
            cap: MAX_LEVEL as u64,
        });
    }
    let mut entries = vec![1u64, 2];
    for _ in 2..=level {
        let mut next = Vec::with_capacity(entries.len() * 2);
        next.extend(entries.iter().map(|&s| 2 * s - 1));
        next.extend(entries.iter().map(|&s| 2 * s));
        entries = next;
    }
    Ok(SchemaTuple { level, entries })
}

/// What a full insertion round adds to each run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InsertionKind {
    /// Grow each run by one empty seat (the row gains a seat, nobody sits).
    EmptySeat,
    /// Split each run by seating someone in its middle (run length must be
    /// even).
    OccupiedSeat,
}

/// Plays one full insertion round over the canonical configuration with
/// `2^level` runs of length `run_len` and returns the configuration after
/// every single insertion.
///
/// The starting row is `X (O^run_len X)^(2^level)`, the stage the plain
/// process reaches by repeated halving; it is checked against
/// [`is_reachable`] before the round starts. Insertions visit the runs in
/// `schema_tuple(level)` order, numbering the runs left to right as of the
/// start of the round.
pub fn simulate_insertions(
    run_len: u64,
    level: u32,
    kind: InsertionKind,
) -> Result<Vec<Vec<bool>>, Error> {
    assert!(run_len >= 1, "run length starts at 1");
    assert!(level >= 1, "levels start at 1");
    if kind == InsertionKind::OccupiedSeat && !run_len.is_multiple_of(2) {
        return Err(Error::OddRunLength { len: run_len });
    }
    let runs = 1u64
        .checked_shl(level)
        .filter(|&r| r.checked_mul(run_len + 2).is_some_and(|s| s < 128))
        .ok_or(Error::AboveCap { what: "simulate_insertions seats", value: level as u64, cap: 128 })?;

    let mut row = vec![true];
    let mut run_starts = Vec::with_capacity(runs as usize);
    for _ in 0..runs {
        run_starts.push(row.len());
        row.extend(core::iter::repeat_n(false, run_len as usize));
        row.push(true);
    }
    if !is_reachable(&row) {
        return Err(Error::UnreachableStart);
    }

    let order = schema_tuple(level)?;
    let mut configurations = Vec::with_capacity(runs as usize);
    for &number in order.entries() {
        let run = (number - 1) as usize;
        match kind {
            InsertionKind::EmptySeat => row.insert(run_starts[run], false),
            InsertionKind::OccupiedSeat => {
                row.insert(run_starts[run] + (run_len / 2) as usize, true)
            }
        }
        // inserted inside run `run`: every later run shifts right by one
        for start in &mut run_starts[run + 1..] {
            *start += 1;
        }
        configurations.push(row.clone());
    }
    Ok(configurations)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_match_listed_values() {
        assert_eq!(schema_tuple(1).unwrap().entries(), &[1, 2]);
        assert_eq!(schema_tuple(2).unwrap().entries(), &[1, 3, 2, 4]);
        assert_eq!(schema_tuple(3).unwrap().entries(), &[1, 5, 3, 7, 2, 6, 4, 8]);
    }

    #[test]
    fn display_is_semicolon_separated() {
        use alloc::string::ToString;
        assert_eq!(schema_tuple(2).unwrap().to_string(), "1;3;2;4");
    }

    #[test]
    fn level_cap() {
        assert!(matches!(schema_tuple(MAX_LEVEL + 1), Err(Error::AboveCap { .. })));
    }

    #[test]
    fn empty_insertions_on_two_unit_runs() {
        // X·X·X -> X··X·X -> X··X··X
        let configs = simulate_insertions(1, 1, InsertionKind::EmptySeat).unwrap();
        assert_eq!(
            configs,
            [
                [true, false, false, true, false, true].to_vec(),
                [true, false, false, true, false, false, true].to_vec(),
            ]
        );
    }

    #[test]
    fn occupied_insertions_split_runs() {
        // X··X··X -> X·X·X··X -> X·X·X·X·X
        let configs = simulate_insertions(2, 1, InsertionKind::OccupiedSeat).unwrap();
        assert_eq!(configs.len(), 2);
        assert_eq!(
            configs[1],
            [true, false, true, false, true, false, true, false, true].to_vec()
        );
    }

    #[test]
    fn occupied_insertions_need_even_runs() {
        assert_eq!(
            simulate_insertions(3, 1, InsertionKind::OccupiedSeat),
            Err(Error::OddRunLength { len: 3 })
        );
    }
}
