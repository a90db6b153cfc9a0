//! The verification sweep behind `polite verify`: every closed form against
//! the brute-force engines, plus the bound and schema properties.

use std::fmt;

use polite_core::counting::{a, a095236, a095912, a166079, a_extended};
use polite_core::oracle::{
    b_census, count_sequences, count_sequences_naive, d_census, is_reachable,
    verify_census_invariance, Rule, NAIVE_CAP,
};
use polite_core::schema::{schema_tuple, simulate_insertions, InsertionKind};
use polite_core::{bounds, closed_form, BigCount, Factorials};

pub const DEFAULT_NMAX_FORMULA: u64 = 18;
pub const DEFAULT_NMAX_ORACLE: u64 = NAIVE_CAP;

/// Variant formulas are backed by enumeration up to this row size.
const VARIANT_NMAX: u64 = 14;
const CENSUS_PMAX: u64 = 64;
const INVARIANCE_PMAX: u64 = 14;

/// The comparison-table rows: `(n, U, a_n, O)`, `U` undefined at `n = 1`.
const GOLDEN_ROWS: [(u64, Option<u64>, u64, u64); 11] = [
    (1, None, 1, 1),
    (2, Some(2), 2, 2),
    (3, Some(2), 4, 6),
    (4, Some(4), 8, 20),
    (5, Some(6), 20, 72),
    (6, Some(12), 48, 288),
    (7, Some(28), 216, 1392),
    (8, Some(48), 576, 7200),
    (9, Some(120), 1392, 38880),
    (10, Some(240), 7200, 250560),
    (15, Some(44640), 21_611_520, 6_531_840_000),
];

pub struct Check {
    pub name: String,
    pub cases: u64,
    pub failure: Option<String>,
}

impl Check {
    fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            match &check.failure {
                None => writeln!(f, "ok    {} ({} cases)", check.name, check.cases)?,
                Some(why) => writeln!(f, "FAIL  {}: {}", check.name, why)?,
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        if failed == 0 {
            write!(f, "all {} checks passed", self.checks.len())
        } else {
            write!(f, "{failed} of {} checks FAILED", self.checks.len())
        }
    }
}

/// Runs the whole suite. `nmax_formula` bounds the formula-vs-enumeration
/// sweeps; `nmax_oracle` (at most [`NAIVE_CAP`]) bounds the naive
/// cross-check.
pub fn run(nmax_formula: u64, nmax_oracle: u64) -> Report {
    let checks = vec![
        sequence_check("a(n) vs enumeration, plain rule", nmax_formula, &a, Rule::PLAIN),
        sequence_check(
            "a095236 vs enumeration, longest-run rule",
            nmax_formula.min(VARIANT_NMAX),
            &a095236,
            Rule::LONGEST_RUN,
        ),
        sequence_check(
            "a095912 vs enumeration, longest-run + fewest-neighbors rule",
            nmax_formula.min(VARIANT_NMAX),
            &a095912,
            Rule::LONGEST_RUN_FEWEST_NEIGHBORS,
        ),
        sequence_check(
            "a_extended vs enumeration, fewest-neighbors rule",
            nmax_formula.min(VARIANT_NMAX),
            &a_extended,
            Rule::FEWEST_NEIGHBORS,
        ),
        naive_check(nmax_oracle),
        census_check(CENSUS_PMAX, &closed_form::b, &closed_form::d),
        invariance_check(INVARIANCE_PMAX),
        a166079_check(CENSUS_PMAX),
        golden_rows_check(),
        sandwich_check(),
        b1_sandwich_check(100_000),
        factorial_product_check(200),
        interval_identity_check(10_000),
        schema_check(),
    ];
    Report { checks }
}

fn sequence_check(name: &str, nmax: u64, formula: &dyn Fn(u64) -> BigCount, rule: Rule) -> Check {
    let mut failure = None;
    for n in 1..=nmax {
        let want = formula(n);
        let got = count_sequences(n, rule);
        if want != got {
            failure = Some(format!("first mismatch at (n={n}, rule={}): formula {want}, oracle {got}", rule.label()));
            break;
        }
    }
    Check { name: format!("{name} (n <= {nmax})"), cases: nmax, failure }
}

fn naive_check(nmax: u64) -> Check {
    let mut failure = None;
    'outer: for rule in Rule::ALL {
        for n in 1..=nmax {
            let memoized = count_sequences(n, rule);
            let naive = count_sequences_naive(n, rule).expect("nmax within cap");
            if memoized != naive {
                failure = Some(format!(
                    "first mismatch at (n={n}, rule={}): memoized {memoized}, naive {naive}",
                    rule.label()
                ));
                break 'outer;
            }
        }
    }
    Check {
        name: format!("memoized vs naive enumeration, all rules (n <= {nmax})"),
        cases: 4 * nmax,
        failure,
    }
}

fn census_check(
    pmax: u64,
    b_of: &dyn Fn(u64, u64) -> u64,
    d_of: &dyn Fn(u64, u64) -> u64,
) -> Check {
    let mut cases = 0;
    let mut failure = None;
    'outer: for p in 1..=pmax {
        let b_table = b_census(p);
        let d_table = d_census(p);
        for k in 1..p.max(2) {
            cases += 1;
            if b_of(p, k) != b_table.count(k) {
                failure = Some(format!(
                    "first mismatch at (p={p}, k={k}): b formula {}, census {}",
                    b_of(p, k),
                    b_table.count(k)
                ));
                break 'outer;
            }
            if d_of(p, k) != d_table.count(k) {
                failure = Some(format!(
                    "first mismatch at (p={p}, k={k}): d formula {}, census {}",
                    d_of(p, k),
                    d_table.count(k)
                ));
                break 'outer;
            }
        }
        if b_table.total() != p - 1 {
            failure = Some(format!("census total at p={p} is {}, not p-1", b_table.total()));
            break;
        }
    }
    Check { name: format!("b/d closed forms vs censuses (p <= {pmax})"), cases, failure }
}

fn invariance_check(pmax: u64) -> Check {
    let mut failure = None;
    for p in 1..=pmax {
        if !verify_census_invariance(p).expect("pmax within cap") {
            failure = Some(format!("censuses differ across trajectories at p={p}"));
            break;
        }
    }
    Check {
        name: format!("census invariance across all trajectories (p <= {pmax})"),
        cases: pmax,
        failure,
    }
}

fn a166079_check(nmax: u64) -> Check {
    let mut failure = None;
    for n in 1..=nmax {
        let want = BigCount::from(n - b_census(n).count(1));
        let got = a166079(n);
        if want != got {
            failure = Some(format!("first mismatch at n={n}: formula {got}, census {want}"));
            break;
        }
    }
    Check { name: format!("a166079 vs census (n <= {nmax})"), cases: nmax, failure }
}

fn golden_rows_check() -> Check {
    let mut failure = None;
    for &(n, u, a_n, o) in &GOLDEN_ROWS {
        let got_a = a(n);
        let got_o = bounds::upper_bound_o(n);
        let got_u = bounds::lower_bound_u(n).ok();
        if got_a != BigCount::from(a_n)
            || got_o != BigCount::from(o)
            || got_u != u.map(BigCount::from)
        {
            failure = Some(format!("row n={n} differs: U={got_u:?}, a={got_a}, O={got_o}"));
            break;
        }
    }
    Check {
        name: "golden comparison-table rows (n in 1..=10, 15)".into(),
        cases: GOLDEN_ROWS.len() as u64,
        failure,
    }
}

fn sandwich_check() -> Check {
    let mut failure = None;
    let mut fact = Factorials::new();
    for n in 2..=30u64 {
        let count = a(n);
        let lower = bounds::lower_bound_u(n).expect("n >= 2");
        let upper = bounds::upper_bound_o(n);
        if !(lower <= count && count <= upper) {
            failure = Some(format!("U <= a <= O fails at n={n}: {lower}, {count}, {upper}"));
            break;
        }
    }
    if failure.is_none() {
        for n in 1..=20u64 {
            let count = a(n);
            if count < BigCount::from(n) || count > *fact.get(n) {
                failure = Some(format!("n <= a(n) <= n! fails at n={n}: a={count}"));
                break;
            }
        }
    }
    Check { name: "bound sandwiches U <= a <= O and n <= a <= n!".into(), cases: 29 + 20, failure }
}

fn b1_sandwich_check(pmax: u64) -> Check {
    let mut failure = None;
    for p in 1..=pmax {
        let b1 = closed_form::b(p, 1);
        if !(bounds::b1_lower(p) <= b1 && b1 <= bounds::b1_upper(p)) {
            failure = Some(format!("b(p,1) sandwich fails at p={p}: b1={b1}"));
            break;
        }
    }
    Check { name: format!("b(p,1) sandwich (p <= {pmax})"), cases: pmax, failure }
}

fn factorial_product_check(pmax: u64) -> Check {
    let mut failure = None;
    let mut fact = Factorials::new();
    for p in 5..=pmax {
        let mut product = BigCount::from(1u32);
        for j in 2..p {
            product *= fact.get(closed_form::b(p, j));
        }
        if bounds::dyadic_factorial_product(p) > product {
            failure = Some(format!("factorial-product bound fails at p={p}"));
            break;
        }
    }
    Check {
        name: format!("factorial-product lower bound (5 <= p <= {pmax})"),
        cases: pmax - 4,
        failure,
    }
}

fn interval_identity_check(pmax: u64) -> Check {
    let mut cases = 0;
    let mut failure = None;
    'outer: for k in 2..=32u64 {
        // stride the sampled p and pin both boundaries of every subinterval
        let mut samples = vec![];
        let mut m = 0u32;
        loop {
            let start = 1 + (1u64 << m) * 2 * k;
            let end = 1 + (1u64 << m) * 2 * (k + 1); // exclusive
            if start > pmax {
                break;
            }
            samples.push(start);
            samples.push((end - 1).min(pmax));
            samples.extend((start..end.min(pmax + 1)).step_by(7));
            m += 1;
        }
        for p in samples {
            cases += 1;
            let m = closed_form::m_index_general(p, k).expect("p >= 1 + 2k");
            let sum = closed_form::b(p, k) + closed_form::b(p, k + 1);
            if sum != 1u64 << m {
                failure = Some(format!(
                    "interval identity fails at (p={p}, k={k}): b sum {sum}, expected 2^{m}"
                ));
                break 'outer;
            }
        }
    }
    Check {
        name: format!("interval identity b(p,k)+b(p,k+1) = 2^m (sampled p <= {pmax})"),
        cases,
        failure,
    }
}

fn schema_check() -> Check {
    let mut cases = 0;
    let mut failure = None;
    let listed: [(u32, &[u64]); 3] =
        [(1, &[1, 2]), (2, &[1, 3, 2, 4]), (3, &[1, 5, 3, 7, 2, 6, 4, 8])];
    for (level, want) in listed {
        cases += 1;
        let tuple = schema_tuple(level).expect("small level");
        if tuple.entries() != want {
            failure = Some(format!("schema tuple at level {level} is {tuple}"));
        }
    }
    for level in 1..=12u32 {
        cases += 1;
        let tuple = schema_tuple(level).expect("level within cap");
        let size = 1u64 << level;
        let mut seen = vec![false; size as usize];
        for &e in tuple.entries() {
            if e < 1 || e > size || seen[(e - 1) as usize] {
                failure.get_or_insert(format!("level {level} tuple is not a permutation"));
                break;
            }
            seen[(e - 1) as usize] = true;
        }
    }
    'outer: for run_len in 1..=3u64 {
        for level in 1..=3u32 {
            for kind in [InsertionKind::EmptySeat, InsertionKind::OccupiedSeat] {
                if kind == InsertionKind::OccupiedSeat && run_len % 2 != 0 {
                    continue;
                }
                let configs =
                    simulate_insertions(run_len, level, kind).expect("valid parameters");
                for (step, config) in configs.iter().enumerate() {
                    cases += 1;
                    if !is_reachable(config) {
                        failure = Some(format!(
                            "unreachable configuration after insertion {} (l={run_len}, h={level}, {kind:?})",
                            step + 1
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    Check { name: "schema tuples and insertion-round reachability".into(), cases, failure }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes() {
        // small limits keep this a smoke test; the acceptance suite runs the
        // full sweep
        let report = run(8, 6);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn corrupted_table_names_the_tuple() {
        // fault injection: poison b at (p=9, k=2)
        let bad_b = |p: u64, k: u64| {
            if p == 9 && k == 2 {
                closed_form::b(p, k) + 1
            } else {
                closed_form::b(p, k)
            }
        };
        let check = census_check(16, &bad_b, &closed_form::d);
        let why = check.failure.expect("corruption must be caught");
        assert!(why.contains("p=9") && why.contains("k=2"), "{why}");
    }

    #[test]
    fn report_formatting() {
        let report = Report {
            checks: vec![
                Check { name: "first".into(), cases: 3, failure: None },
                Check { name: "second".into(), cases: 1, failure: Some("broken at (n=2)".into()) },
            ],
        };
        let text = report.to_string();
        assert!(text.contains("ok    first (3 cases)"));
        assert!(text.contains("FAIL  second: broken at (n=2)"));
        assert!(text.ends_with("1 of 2 checks FAILED"));
        assert!(!report.all_passed());
        assert_eq!(report.first_failure().unwrap().name, "second");
    }
}
