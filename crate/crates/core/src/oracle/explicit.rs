//! Explicit-vector simulation: the oracle of the oracle.
//!
//! Everything here works on plain `[bool]` occupancy vectors with no gap
//! abstraction, so it can double-check the abstraction and answer questions
//! the abstraction cannot (censuses need seat identities, reachability needs
//! the target set).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::Rule;
use crate::{BigCount, Error};

/// Largest row the naive enumerator will take on.
pub const NAIVE_CAP: u64 = 11;

/// Largest row for exhaustive census-invariance exploration.
pub const INVARIANCE_CAP: u64 = 14;

/// Mapping from a distance `k` to a nonnegative count of events.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusTable {
    counts: BTreeMap<u64, u64>,
}

impl CensusTable {
    pub fn count(&self, k: u64) -> u64 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    /// `(distance, count)` entries with nonzero count, ascending by distance.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    fn add(&mut self, k: u64) {
        *self.counts.entry(k).or_insert(0) += 1;
    }

    fn remove_one(&mut self, k: u64) {
        let c = self.counts.get_mut(&k).expect("removing a recorded distance");
        *c -= 1;
        if *c == 0 {
            self.counts.remove(&k);
        }
    }
}

impl FromIterator<(u64, u64)> for CensusTable {
    fn from_iter<I: IntoIterator<Item = (u64, u64)>>(iter: I) -> Self {
        CensusTable { counts: iter.into_iter().filter(|&(_, c)| c > 0).collect() }
    }
}

/// Distance of every empty seat to the nearest occupied one; `None` for
/// occupied seats. Needs at least one occupied seat.
fn seat_distances(occupancy: &[bool]) -> Vec<Option<u64>> {
    let n = occupancy.len();
    let mut dist = vec![None; n];
    let mut last: Option<usize> = None;
    for s in 0..n {
        if occupancy[s] {
            last = Some(s);
        } else if let Some(o) = last {
            dist[s] = Some((s - o) as u64);
        }
    }
    last = None;
    for s in (0..n).rev() {
        if occupancy[s] {
            last = Some(s);
        } else if let Some(o) = last {
            let from_right = (o - s) as u64;
            dist[s] = Some(dist[s].map_or(from_right, |d| d.min(from_right)));
        }
    }
    dist
}

fn occupied_neighbors(occupancy: &[bool], seat: usize) -> u8 {
    let left = seat > 0 && occupancy[seat - 1];
    let right = seat + 1 < occupancy.len() && occupancy[seat + 1];
    left as u8 + right as u8
}

/// All seats the next person may take, ascending. Assumes at least one
/// occupied and one empty seat.
pub(crate) fn legal_seats(occupancy: &[bool], rule: Rule) -> Vec<usize> {
    let dist = seat_distances(occupancy);
    let mut pool: Vec<usize> = if rule.longest_run {
        // Runs compare by unfolded length: a run touching an edge folds out
        // to twice its length minus one.
        let unfolded = |r: &EmptyRun| {
            if r.start == 0 || r.start + r.len == occupancy.len() {
                2 * r.len - 1
            } else {
                r.len
            }
        };
        let runs = empty_runs(occupancy);
        let longest = runs.iter().map(unfolded).max().expect("an empty seat remains");
        runs.iter()
            .filter(|r| unfolded(r) == longest)
            .flat_map(|r| r.start..r.start + r.len)
            .collect()
    } else {
        (0..occupancy.len()).filter(|&s| !occupancy[s]).collect()
    };
    let best = pool.iter().filter_map(|&s| dist[s]).max().expect("an empty seat remains");
    pool.retain(|&s| dist[s] == Some(best));
    if rule.fewest_neighbors {
        let fewest =
            pool.iter().map(|&s| occupied_neighbors(occupancy, s)).min().expect("nonempty pool");
        pool.retain(|&s| occupied_neighbors(occupancy, s) == fewest);
    }
    pool
}

struct EmptyRun {
    start: usize,
    len: usize,
}

fn empty_runs(occupancy: &[bool]) -> Vec<EmptyRun> {
    let mut runs = Vec::new();
    let mut start = None;
    for (s, &occupied) in occupancy.iter().enumerate() {
        match (occupied, start) {
            (false, None) => start = Some(s),
            (true, Some(from)) => {
                runs.push(EmptyRun { start: from, len: s - from });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(from) = start {
        runs.push(EmptyRun { start: from, len: occupancy.len() - from });
    }
    runs
}

/// Depth-first enumeration over explicit occupancy vectors, no memoization.
///
/// Must agree with [`super::count_sequences`]; capped at [`NAIVE_CAP`] seats
/// because it visits every sequence.
pub fn count_sequences_naive(n: u64, rule: Rule) -> Result<BigCount, Error> {
    assert!(n >= 1, "seat count starts at 1");
    if n > NAIVE_CAP {
        return Err(Error::AboveCap { what: "count_sequences_naive", value: n, cap: NAIVE_CAP });
    }
    let mut occupancy = vec![false; n as usize];
    Ok(naive_rec(&mut occupancy, n as usize, rule))
}

fn naive_rec(occupancy: &mut [bool], remaining: usize, rule: Rule) -> BigCount {
    if remaining == 0 {
        return BigCount::from(1u32);
    }
    let seats: Vec<usize> = if remaining == occupancy.len() {
        (0..occupancy.len()).collect()
    } else {
        legal_seats(occupancy, rule)
    };
    let mut total = BigCount::from(0u32);
    for s in seats {
        occupancy[s] = true;
        total += naive_rec(occupancy, remaining - 1, rule);
        occupancy[s] = false;
    }
    total
}

/// Adjacent pairs of empty seats whose two distances currently agree,
/// as `(left seat index, shared distance)`.
fn equal_adjacent_pairs(occupancy: &[bool]) -> Vec<(usize, u64)> {
    let dist = seat_distances(occupancy);
    (0..occupancy.len().saturating_sub(1))
        .filter_map(|s| match (dist[s], dist[s + 1]) {
            (Some(a), Some(b)) if a == b => Some((s, a)),
            _ => None,
        })
        .collect()
}

/// One canonical trajectory: first person leftmost, plain rule, leftmost
/// candidate on every tie. Returns the distance census and the pair census.
fn canonical_trajectory(p: u64) -> (CensusTable, CensusTable) {
    let p = p as usize;
    let mut occupancy = vec![false; p];
    occupancy[0] = true;
    let mut b_table = CensusTable::default();
    let mut pairs: BTreeSet<(usize, u64)> = BTreeSet::new();
    pairs.extend(equal_adjacent_pairs(&occupancy));
    for _person in 2..=p {
        let dist = seat_distances(&occupancy);
        let seat = legal_seats(&occupancy, Rule::PLAIN)[0];
        b_table.add(dist[seat].expect("legal seat is empty"));
        occupancy[seat] = true;
        pairs.extend(equal_adjacent_pairs(&occupancy));
    }
    let mut d_table = CensusTable::default();
    for &(_, k) in &pairs {
        d_table.add(k);
    }
    (b_table, d_table)
}

/// Census of seating distances: how many of persons `2..=p` sat down at each
/// distance, on the canonical trajectory.
pub fn b_census(p: u64) -> CensusTable {
    assert!(p >= 1, "seat count starts at 1");
    canonical_trajectory(p).0
}

/// Census of adjacent-seat pairs that at some moment both carried the same
/// distance, keyed by that distance, on the canonical trajectory. A pair is
/// recorded once per distance it achieves.
pub fn d_census(p: u64) -> CensusTable {
    assert!(p >= 1, "seat count starts at 1");
    canonical_trajectory(p).1
}

/// True iff every plain-rule trajectory starting at the leftmost seat yields
/// exactly the censuses of the canonical trajectory.
///
/// Explores every branch exhaustively, so `p` is capped at
/// [`INVARIANCE_CAP`].
pub fn verify_census_invariance(p: u64) -> Result<bool, Error> {
    assert!(p >= 1, "seat count starts at 1");
    if p > INVARIANCE_CAP {
        return Err(Error::AboveCap {
            what: "verify_census_invariance",
            value: p,
            cap: INVARIANCE_CAP,
        });
    }
    let reference = canonical_trajectory(p);
    let p = p as usize;
    let mut occupancy = vec![false; p];
    occupancy[0] = true;
    let mut b_table = CensusTable::default();
    let mut pairs: BTreeSet<(usize, u64)> = BTreeSet::new();
    pairs.extend(equal_adjacent_pairs(&occupancy));
    Ok(all_branches_match(&mut occupancy, p - 1, &mut b_table, &mut pairs, &reference))
}

fn all_branches_match(
    occupancy: &mut [bool],
    remaining: usize,
    b_table: &mut CensusTable,
    pairs: &mut BTreeSet<(usize, u64)>,
    reference: &(CensusTable, CensusTable),
) -> bool {
    if remaining == 0 {
        if *b_table != reference.0 {
            return false;
        }
        let mut d_table = CensusTable::default();
        for &(_, k) in pairs.iter() {
            d_table.add(k);
        }
        return d_table == reference.1;
    }
    let dist = seat_distances(occupancy);
    for seat in legal_seats(occupancy, Rule::PLAIN) {
        let k = dist[seat].expect("legal seat is empty");
        occupancy[seat] = true;
        b_table.add(k);
        let mut added = Vec::new();
        for pair in equal_adjacent_pairs(occupancy) {
            if pairs.insert(pair) {
                added.push(pair);
            }
        }
        let ok = all_branches_match(occupancy, remaining - 1, b_table, pairs, reference);
        for pair in added {
            pairs.remove(&pair);
        }
        b_table.remove_one(k);
        occupancy[seat] = false;
        if !ok {
            return false;
        }
    }
    true
}

/// True iff some ordering of the occupied seats of `occupancy` is a legal
/// prefix of the plain-rule process.
///
/// Memoized search over occupied subsets, with moves restricted to the
/// target set; rows are capped at 128 seats so a subset fits a `u128`.
pub fn is_reachable(occupancy: &[bool]) -> bool {
    let n = occupancy.len();
    assert!(n >= 1, "row has at least one seat");
    assert!(n <= 128, "reachability search caps the row at 128 seats");
    let target = occupancy
        .iter()
        .enumerate()
        .fold(0u128, |mask, (s, &o)| if o { mask | (1 << s) } else { mask });
    if target == 0 {
        return true;
    }
    let mut current = vec![false; n];
    let mut dead: BTreeSet<u128> = BTreeSet::new();
    // The first person chooses freely; later moves must be rule-legal.
    for s in 0..n {
        if occupancy[s] {
            current[s] = true;
            let found = extend_to_target(&mut current, 1 << s, target, &mut dead);
            current[s] = false;
            if found {
                return true;
            }
        }
    }
    false
}

fn extend_to_target(
    current: &mut [bool],
    mask: u128,
    target: u128,
    dead: &mut BTreeSet<u128>,
) -> bool {
    if mask == target {
        return true;
    }
    if dead.contains(&mask) {
        return false;
    }
    for seat in legal_seats(current, Rule::PLAIN) {
        if target & (1 << seat) != 0 {
            current[seat] = true;
            let found = extend_to_target(current, mask | (1 << seat), target, dead);
            current[seat] = false;
            if found {
                return true;
            }
        }
    }
    dead.insert(mask);
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(entries: &[(u64, u64)]) -> CensusTable {
        entries.iter().copied().collect()
    }

    #[test]
    fn naive_counts() {
        assert_eq!(count_sequences_naive(2, Rule::PLAIN).unwrap(), BigCount::from(2u32));
        assert_eq!(count_sequences_naive(8, Rule::PLAIN).unwrap(), BigCount::from(576u32));
        for rule in Rule::ALL {
            assert_eq!(count_sequences_naive(1, rule).unwrap(), BigCount::from(1u32));
        }
        assert!(matches!(
            count_sequences_naive(12, Rule::PLAIN),
            Err(Error::AboveCap { .. })
        ));
    }

    #[test]
    fn b_census_examples() {
        assert_eq!(b_census(2), table(&[(1, 1)]));
        assert_eq!(b_census(5), table(&[(4, 1), (2, 1), (1, 2)]));
        assert!(b_census(1).is_empty());
    }

    #[test]
    fn b_census_totals() {
        for p in 2..=40 {
            assert_eq!(b_census(p).total(), p - 1, "p={p}");
        }
    }

    #[test]
    fn d_census_examples() {
        assert_eq!(d_census(4), table(&[(1, 1)]));
        assert_eq!(d_census(6), table(&[(2, 1), (1, 1)]));
        assert!(d_census(3).is_empty());
    }

    #[test]
    fn census_invariance_small() {
        assert_eq!(verify_census_invariance(1), Ok(true));
        assert_eq!(verify_census_invariance(6), Ok(true));
        assert_eq!(verify_census_invariance(12), Ok(true));
        assert!(matches!(verify_census_invariance(15), Err(Error::AboveCap { .. })));
    }

    #[test]
    fn reachability_examples() {
        // X·X·X: order 1, 5, 3
        assert!(is_reachable(&[true, false, true, false, true]));
        // XX···: the second person is forced to the far end
        assert!(!is_reachable(&[true, true, false, false, false]));
        for s in 0..5 {
            let mut occ = [false; 5];
            occ[s] = true;
            assert!(is_reachable(&occ));
        }
        assert!(is_reachable(&[false, false, false]));
    }

    #[test]
    fn legal_seats_leftmost_first() {
        // X·····: the far end is the unique best seat
        let occ = [true, false, false, false, false, false];
        assert_eq!(legal_seats(&occ, Rule::PLAIN), vec![5]);
        // X····X: the two central seats tie
        let occ = [true, false, false, false, false, true];
        assert_eq!(legal_seats(&occ, Rule::PLAIN), vec![2, 3]);
    }
}
