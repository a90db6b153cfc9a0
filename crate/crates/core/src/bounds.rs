//! Lower and upper estimates for the sequence count `a(n)`.
//!
//! The lower bound `U` keeps only the mirror-symmetric half of the summation
//! behind `a(n)`, replaces the distance-1 factorial by the floor bound on
//! `b(p, 1)`, and replaces the product over distances `>= 2` by the factorial
//! product `∏ (2^(j-1))!` it dominates. The upper bound `O` replaces
//! `b(p, 1)` by its ceiling bound and lets everyone else choose freely.

use crate::{BigCount, Error, Factorials};

/// Per-summand data for the bound formulas: the summation index `i` of
/// `lower_bound_u(n)` together with its dyadic index
/// `m_i = ⌊log2((i-1)/4)⌋`, which is negative (empty product) for `i < 5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundQuery {
    pub n: u64,
    pub i: u64,
    pub m_i: Option<u32>,
}

impl BoundQuery {
    pub fn new(n: u64, i: u64) -> Self {
        assert!(1 <= i && i <= n, "summation index inside 1..=n");
        Self { n, i, m_i: product_index(i) }
    }
}

/// `⌊log2((p-1)/4)⌋` when nonnegative; `None` encodes the empty product
/// (the argument of the logarithm drops below 1 for `p < 5`).
fn product_index(p: u64) -> Option<u32> {
    if p < 5 {
        return None;
    }
    let mut m = 0u32;
    let mut bound = 4u64;
    let x = p - 1;
    while bound <= x / 2 {
        bound *= 2;
        m += 1;
    }
    Some(m)
}

/// `∏_{j=1..m'} (2^(j-1))!` with `m' = ⌊log2((p-1)/4)⌋`; the empty product
/// (any `m' < 1`, including undefined) is 1.
pub fn dyadic_factorial_product(p: u64) -> BigCount {
    assert!(p >= 1, "seat count starts at 1");
    let mut fact = Factorials::new();
    dyadic_factorial_product_with(p, &mut fact)
}

fn dyadic_factorial_product_with(p: u64, fact: &mut Factorials) -> BigCount {
    let mut result = BigCount::from(1u32);
    if let Some(m) = product_index(p) {
        for j in 1..=m as u64 {
            result *= fact.get(1u64 << (j - 1));
        }
    }
    result
}

/// The lower bound `U <= a(n)`, defined for `n >= 2`.
///
/// `U = 2·Σ_{i=⌈n/2⌉+1..n} (⌊(i-1)/2⌋ + ⌊(n-i)/2⌋)! · ∏_{j=1..m_i} (2^(j-1))!`
pub fn lower_bound_u(n: u64) -> Result<BigCount, Error> {
    if n < 2 {
        return Err(Error::BelowMinimum { what: "lower_bound_u", value: n, min: 2 });
    }
    let mut fact = Factorials::new();
    let mut sum = BigCount::from(0u32);
    for i in (n / 2 + n % 2 + 1)..=n {
        let mut term = fact.get((i - 1) / 2 + (n - i) / 2).clone();
        term *= dyadic_factorial_product_with(i, &mut fact);
        sum += term;
    }
    Ok(sum * 2u32)
}

/// The upper bound `a(n) <= O`, defined for all `n >= 1`.
///
/// `O = Σ_{i=1..n} (⌈2(i-1)/3⌉ + ⌈2(n-i)/3⌉)! · (n - ⌈2(i-1)/3⌉ - ⌈2(n-i)/3⌉)!`
pub fn upper_bound_o(n: u64) -> BigCount {
    assert!(n >= 1, "seat count starts at 1");
    let mut fact = Factorials::new();
    let mut sum = BigCount::from(0u32);
    for i in 1..=n {
        let ones = ceil_two_thirds(i - 1) + ceil_two_thirds(n - i);
        debug_assert!(ones <= n);
        let ordered = fact.get(ones).clone();
        sum += ordered * fact.get(n - ones);
    }
    sum
}

fn ceil_two_thirds(x: u64) -> u64 {
    (2 * x).div_ceil(3)
}

/// Floor bound `⌊(p-1)/2⌋ <= b(p, 1)`.
pub fn b1_lower(p: u64) -> u64 {
    assert!(p >= 1, "seat count starts at 1");
    (p - 1) / 2
}

/// Ceiling bound `b(p, 1) <= ⌈2(p-1)/3⌉`.
pub fn b1_upper(p: u64) -> u64 {
    assert!(p >= 1, "seat count starts at 1");
    ceil_two_thirds(p - 1)
}
