//! Cross-checks of every closed form against the brute-force engines.

use polite_core::counting::{a, a095236, a095912, a166079, a_extended};
use polite_core::oracle::{
    b_census, candidates, count_sequences, count_sequences_first_at, count_sequences_naive,
    d_census, verify_census_invariance, GapState, Rule,
};
use polite_core::{bounds, closed_form, BigCount};
use std::collections::BTreeSet;

#[test]
fn b_and_d_match_censuses_up_to_64() {
    for p in 1..=64u64 {
        let b_tab = b_census(p);
        let d_tab = d_census(p);
        for k in 1..p.max(2) {
            assert_eq!(closed_form::b(p, k), b_tab.count(k), "b mismatch at p={p} k={k}");
            assert_eq!(closed_form::d(p, k), d_tab.count(k), "d mismatch at p={p} k={k}");
        }
        // nothing beyond the largest possible distance
        assert!(b_tab.iter().all(|(k, _)| k < p));
        assert!(d_tab.iter().all(|(k, _)| k < p));
    }
}

#[test]
fn plain_count_matches_enumeration_up_to_18() {
    for n in 1..=18u64 {
        assert_eq!(a(n), count_sequences(n, Rule::PLAIN), "n={n}");
    }
}

#[test]
fn variant_counts_match_enumeration_up_to_14() {
    for n in 1..=14u64 {
        assert_eq!(a095236(n), count_sequences(n, Rule::LONGEST_RUN), "A095236 at n={n}");
        assert_eq!(
            a095912(n),
            count_sequences(n, Rule::LONGEST_RUN_FEWEST_NEIGHBORS),
            "A095912 at n={n}"
        );
        assert_eq!(a_extended(n), count_sequences(n, Rule::FEWEST_NEIGHBORS), "A_n at n={n}");
    }
}

#[test]
fn memoized_equals_naive_up_to_cap() {
    for rule in Rule::ALL {
        for n in 1..=11u64 {
            assert_eq!(
                count_sequences(n, rule),
                count_sequences_naive(n, rule).unwrap(),
                "n={n} rule={}",
                rule.label()
            );
        }
    }
}

#[test]
fn a166079_matches_census_up_to_64() {
    for n in 1..=64u64 {
        assert_eq!(a166079(n), BigCount::from(n - b_census(n).count(1)), "n={n}");
    }
}

#[test]
fn census_invariance_up_to_10() {
    // the full sweep to 14 runs in the acceptance suite
    for p in 1..=10u64 {
        assert_eq!(verify_census_invariance(p), Ok(true), "p={p}");
    }
}

#[test]
fn tie_break_filters_only_restrict() {
    for n in 1..=14u64 {
        assert!(a095912(n) <= a095236(n), "n={n}");
        assert!(a_extended(n) <= a(n), "n={n}");
    }
}

#[test]
fn bounds_sandwich_the_count() {
    for n in 2..=30u64 {
        let count = a(n);
        assert!(bounds::lower_bound_u(n).unwrap() <= count, "U > a at n={n}");
        assert!(count <= bounds::upper_bound_o(n), "a > O at n={n}");
    }
}

#[test]
fn b1_bounds_sandwich_the_closed_form() {
    for p in 1..=5000u64 {
        let b1 = closed_form::b(p, 1);
        assert!(bounds::b1_lower(p) <= b1 && b1 <= bounds::b1_upper(p), "p={p}");
    }
}

/// Every reachable mid-process state offers at least one plain-rule seat,
/// and all offered seats share one distance.
#[test]
fn plain_candidates_nonempty_and_equidistant() {
    for n in 1..=12u64 {
        let mut seen: BTreeSet<GapState> = BTreeSet::new();
        let mut frontier: Vec<GapState> = (1..=n).map(|i| GapState::first_move(n, i)).collect();
        while let Some(state) = frontier.pop() {
            if state.is_full() || !seen.insert(state.clone()) {
                continue;
            }
            let cands = candidates(&state, Rule::PLAIN).unwrap();
            assert!(!cands.is_empty(), "no candidates for {state:?}");
            assert!(
                cands.iter().all(|c| c.distance == cands[0].distance),
                "mixed distances for {state:?}"
            );
            for c in &cands {
                let next = state.occupy(c.gap);
                assert_eq!(next.empty_seats() + 1, state.empty_seats(), "{state:?}");
                frontier.push(next);
            }
        }
    }
}

/// Mirroring a state never changes its continuation count.
#[test]
fn mirrored_states_count_alike() {
    use polite_core::oracle::count_continuations;
    for rule in Rule::ALL {
        for n in 1..=14u64 {
            for i in 1..=n {
                let state = GapState::first_move(n, i);
                assert_eq!(
                    count_continuations(&state, rule),
                    count_continuations(&state.mirrored(), rule),
                    "n={n} i={i} rule={}",
                    rule.label()
                );
            }
        }
    }
}

#[test]
fn first_seat_split_is_exhaustive() {
    for n in [5u64, 9, 13] {
        let total: BigCount = (1..=n)
            .map(|i| count_sequences_first_at(n, i, Rule::PLAIN).unwrap())
            .fold(BigCount::from(0u32), |acc, c| acc + c);
        assert_eq!(total, count_sequences(n, Rule::PLAIN), "n={n}");
    }
}
