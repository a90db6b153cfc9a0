//! Output formats: semicolon CSV tables, OEIS b-files, and the bounds
//! comparison table.
//!
//! No floating point is involved anywhere; the ratio columns are exact
//! rationals rendered to a fixed number of decimals at print time.

use std::io::{self, Write};

use clap::ValueEnum;
use polite_core::{bounds, closed_form, counting, BigCount, Factorials};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    B,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SequenceName {
    An,
    A166079,
    A095236,
    A095240,
    A095912,
    #[value(name = "a_ext")]
    AExt,
}

impl SequenceName {
    /// First index of the emitted b-file; A095240 is only defined from 2.
    pub fn first_index(self) -> u64 {
        match self {
            SequenceName::A095240 => 2,
            _ => 1,
        }
    }

    fn value(self, n: u64) -> BigCount {
        match self {
            SequenceName::An => counting::a(n),
            SequenceName::A166079 => counting::a166079(n),
            SequenceName::A095236 => counting::a095236(n),
            SequenceName::A095240 => counting::a095240(n).expect("n >= 2"),
            SequenceName::A095912 => counting::a095912(n),
            SequenceName::AExt => counting::a_extended(n),
        }
    }
}

/// `p;value` lines for `b` or `d` at fixed distance `k`, `p = 1..=pmax`.
pub fn write_table(out: &mut dyn Write, kind: TableKind, k: u64, pmax: u64) -> io::Result<()> {
    for p in 1..=pmax {
        let value = match kind {
            TableKind::B => closed_form::b(p, k),
            TableKind::D => closed_form::d(p, k),
        };
        writeln!(out, "{p};{value}")?;
    }
    Ok(())
}

/// OEIS b-file lines `n value` from the sequence's first index to `nmax`.
pub fn write_sequence(out: &mut dyn Write, name: SequenceName, nmax: u64) -> io::Result<()> {
    for n in name.first_index()..=nmax {
        writeln!(out, "{n} {}", name.value(n))?;
    }
    Ok(())
}

/// The comparison table `n, U/a_n, U, a_n, O, O/a_n, n!` for `n = 1..=nmax`.
///
/// `U` is undefined at `n = 1`; its value and ratio columns show `/` there.
pub fn write_bounds_table(out: &mut dyn Write, nmax: u64, precision: u32) -> io::Result<()> {
    let mut fact = Factorials::new();
    let header: Vec<String> =
        ["n", "U/a_n", "U", "a_n", "O", "O/a_n", "n!"].iter().map(|s| s.to_string()).collect();
    let mut rows = vec![header];
    for n in 1..=nmax {
        let a = counting::a(n);
        let o = bounds::upper_bound_o(n);
        let (u_str, u_ratio) = match bounds::lower_bound_u(n) {
            Ok(u) => {
                let ratio = format_ratio(&u, &a, precision);
                (u.to_string(), ratio)
            }
            Err(_) => ("/".to_string(), "/".to_string()),
        };
        rows.push(vec![
            n.to_string(),
            u_ratio,
            u_str,
            a.to_string(),
            o.to_string(),
            format_ratio(&o, &a, precision),
            fact.get(n).to_string(),
        ]);
    }
    let widths: Vec<usize> =
        (0..7).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap()).collect();
    for row in &rows {
        let line: Vec<String> =
            row.iter().zip(&widths).map(|(cell, w)| format!("{cell:>w$}")).collect();
        writeln!(out, "{}", line.join("  "))?;
    }
    Ok(())
}

/// `num / den` as a decimal string with `precision` places, rounding half
/// away from zero. Exact integer arithmetic only.
pub fn format_ratio(num: &BigCount, den: &BigCount, precision: u32) -> String {
    assert!(*den != BigCount::from(0u32), "ratio denominator is zero");
    let scale = BigCount::from(10u32).pow(precision);
    let scaled = num * &scale;
    let mut q = &scaled / den;
    let r = &scaled % den;
    if r * 2u32 >= *den {
        q += 1u32;
    }
    if precision == 0 {
        return q.to_string();
    }
    let int_part = &q / &scale;
    let frac = (&q % &scale).to_string();
    let mut s = int_part.to_string();
    s.push('.');
    for _ in frac.len()..precision as usize {
        s.push('0');
    }
    s.push_str(&frac);
    s
}
