//! Property tests for the dyadic-interval structure of the closed forms.

use polite_core::{bounds, closed_form, BigCount, Factorials};
use proptest::prelude::*;

proptest! {
    /// The dyadic index is pinned by its defining double inequality, not by
    /// any rounding behavior.
    #[test]
    fn m_index_general_is_exact(p in 5u64..=1_000_000_000, k in 2u64..=64) {
        prop_assume!(p > 2 * k);
        let m = closed_form::m_index_general(p, k).unwrap();
        let lo = (1u128 << m) * 2 * k as u128;
        prop_assert!(lo <= (p - 1) as u128);
        prop_assert!(((p - 1) as u128) < 2 * lo);
    }

    #[test]
    fn m_index_one_is_exact(p in 4u64..=1_000_000_000) {
        let m = closed_form::m_index_one(p).unwrap();
        let lo = (1u128 << m) * 3;
        prop_assert!(lo <= (p - 1) as u128);
        prop_assert!(((p - 1) as u128) < 2 * lo);
    }

    /// Everyone except the first person sits at some distance.
    #[test]
    fn b_row_sums_to_p_minus_one(p in 2u64..=512) {
        let sum: u64 = (1..p).map(|k| closed_form::b(p, k)).sum();
        prop_assert_eq!(sum, p - 1);
    }

    /// A pair choice presupposes a person at that distance.
    #[test]
    fn d_at_most_b(p in 1u64..=4096, k in 1u64..=64) {
        prop_assert!(closed_form::d(p, k) <= closed_form::b(p, k));
    }

    /// Inside [1+2^m·2k, 1+2^m·2(k+1)) the counts at distances k and k+1
    /// add up to 2^m. Samples are built inside the subinterval, which spans
    /// only a 1/k fraction of the dyadic interval that fixes m.
    #[test]
    fn interval_identity(k in 2u64..=32, m in 0u32..=8, offset in 0u64..=511) {
        let width = (1u64 << m) * 2;
        let p = 1 + width * k + offset % width;
        prop_assert_eq!(closed_form::m_index_general(p, k), Ok(m));
        prop_assert_eq!(
            closed_form::b(p, k) + closed_form::b(p, k + 1),
            1u64 << m
        );
    }

    /// The floor/ceiling lines really do sandwich b(p, 1).
    #[test]
    fn b1_sandwich(p in 1u64..=10_000_000) {
        let b1 = closed_form::b(p, 1);
        prop_assert!(bounds::b1_lower(p) <= b1);
        prop_assert!(b1 <= bounds::b1_upper(p));
    }

    /// The dyadic factorial product stays below the product it bounds.
    #[test]
    fn dyadic_factorial_product_is_a_lower_bound(p in 5u64..=200) {
        let mut fact = Factorials::new();
        let mut rhs = BigCount::from(1u32);
        for j in 2..p {
            rhs *= fact.get(closed_form::b(p, j));
        }
        prop_assert!(bounds::dyadic_factorial_product(p) <= rhs);
    }
}

/// Bit-reversal characterization of the insertion tuples, kept out of the
/// generator on purpose: `s_{2^i, j} = reverse_i(j - 1) + 1`.
#[test]
fn schema_tuple_is_bit_reversal_permutation() {
    for level in 1..=12u32 {
        let tuple = polite_core::schema::schema_tuple(level).unwrap();
        let size = 1u64 << level;
        // permutation of 1..=2^level
        let mut seen = vec![false; size as usize];
        for &e in tuple.entries() {
            assert!(1 <= e && e <= size, "entry {e} out of range at level {level}");
            assert!(!seen[(e - 1) as usize], "entry {e} repeated at level {level}");
            seen[(e - 1) as usize] = true;
        }
        // bit-reversal form
        for (j, &e) in tuple.entries().iter().enumerate() {
            let reversed = (j as u64).reverse_bits() >> (64 - level);
            assert_eq!(e, reversed + 1, "level {level}, position {}", j + 1);
        }
    }
}
