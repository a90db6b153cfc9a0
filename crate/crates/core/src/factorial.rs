//! Memoized exact factorials.

use alloc::vec;
use alloc::vec::Vec;

use crate::BigCount;

/// A growable table of exact factorials.
///
/// The sequence formulas take factorials of the same small arguments over and
/// over; each top-level evaluation owns one table, so concurrent evaluations
/// never share state.
#[derive(Clone, Debug)]
pub struct Factorials {
    cache: Vec<BigCount>,
}

impl Factorials {
    pub fn new() -> Self {
        Self {
            cache: vec![BigCount::from(1u32)],
        }
    }

    /// `n!`, extending the table as needed.
    pub fn get(&mut self, n: u64) -> &BigCount {
        let n = usize::try_from(n).expect("factorial argument fits usize");
        while self.cache.len() <= n {
            let next = self.cache.last().expect("table never empty") * (self.cache.len() as u64);
            self.cache.push(next);
        }
        &self.cache[n]
    }
}

impl Default for Factorials {
    fn default() -> Self {
        Self::new()
    }
}
