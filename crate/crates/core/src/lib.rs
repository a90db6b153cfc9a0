//! Exact combinatorics of the polite-seating process.
//!
//! A row of `n` seats is filled by `n` people, each of whom takes a seat
//! maximizing the distance to the nearest occupied seat. This crate computes,
//! with exact integer arithmetic throughout:
//!
//! * [`closed_form`] — the per-distance occupation counts `b(p, k)` and the
//!   adjacent-pair counts `d(p, k)`, as piecewise formulas over dyadic
//!   intervals of `p`;
//! * [`counting`] — the number of distinct seating sequences `a(n)`, the
//!   related OEIS sequences A166079, A095236, A095240 and A095912, and the
//!   count under the extended rule preferring seats with fewer occupied
//!   neighbors;
//! * [`bounds`] — lower and upper bounds `U ≤ a(n) ≤ O` and the sandwich
//!   around `b(p, 1)`;
//! * [`oracle`] — a brute-force process simulator used as ground truth for
//!   all of the above;
//! * [`schema`] — the round-robin insertion orders that grow a configuration
//!   from `p` to `p + 1` seats without disturbing legality.
//!
//! The crate is `no_std` (it allocates, but performs no IO); the companion
//! CLI crate wires these functions to files and the terminal.

#![no_std]

extern crate alloc;

use core::fmt;

pub mod bounds;
pub mod closed_form;
pub mod counting;
mod factorial;
pub mod oracle;
pub mod schema;

pub use factorial::Factorials;

/// Exact nonnegative count of unbounded size.
///
/// Sequence values such as `a(n)` involve factorials of order `n` and
/// outgrow machine words quickly; everything downstream of the closed forms
/// is computed in this type.
pub type BigCount = num_bigint::BigUint;

/// Errors reported by the operations with restricted domains.
///
/// The plain evaluators (`b`, `d`, the sequence counts) are total over their
/// documented preconditions and do not produce errors; only the operations
/// whose domain genuinely starts later, or whose exhaustive search is capped,
/// return `Result`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// `m_index_general` is defined only for `k >= 2` and `p >= 1 + 2k`.
    MIndexDomain { p: u64, k: u64 },
    /// `m_index_one` is defined only for `p >= 4`.
    MIndexOneDomain { p: u64 },
    /// An operation was called below the first index it is defined for.
    BelowMinimum {
        what: &'static str,
        value: u64,
        min: u64,
    },
    /// An exhaustive operation was called above its configured cap.
    AboveCap {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    /// A first-move seat index outside `1..=n`.
    FirstSeatOutOfRange { n: u64, seat: u64 },
    /// `candidates` was asked for a move in a fully occupied row.
    NoEmptySeats,
    /// Inserting an occupied seat needs a run of even length.
    OddRunLength { len: u64 },
    /// A constructed starting configuration failed the reachability check.
    UnreachableStart,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::MIndexDomain { p, k } => {
                write!(f, "m index undefined for p={p}, k={k} (needs k >= 2, p >= 1+2k)")
            }
            Error::MIndexOneDomain { p } => {
                write!(f, "m index undefined for p={p} at distance 1 (needs p >= 4)")
            }
            Error::BelowMinimum { what, value, min } => {
                write!(f, "{what} is defined from {min}, got {value}")
            }
            Error::AboveCap { what, value, cap } => {
                write!(f, "{what} capped at {cap}, got {value}")
            }
            Error::FirstSeatOutOfRange { n, seat } => {
                write!(f, "first seat {seat} outside 1..={n}")
            }
            Error::NoEmptySeats => write!(f, "no empty seats left to occupy"),
            Error::OddRunLength { len } => {
                write!(f, "occupied-seat insertion needs an even run length, got {len}")
            }
            Error::UnreachableStart => {
                write!(f, "starting configuration is not reachable by the process")
            }
        }
    }
}

impl core::error::Error for Error {}
