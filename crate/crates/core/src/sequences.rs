//! The three-term recurrence
//!
//! ```text
//! (n+1)^5 u_{n+1} = 3(2n+1)(3n^2+3n+1)(15n^2+15n+4) u_n + 3n^3(3n-1)(3n+1) u_{n-1}
//! ```
//!
//! with `u_0 = 1, u_1 = 12` and `v_0 = 0, v_1 = 13`.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::arith::{rat_int, Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRow {
    pub n: usize,
    pub u: Rational,
    pub v: Rational,
}

/// Coefficients `(lead, mid, tail)` of the recurrence at index `n`:
/// `lead u_{n+1} = mid u_n + tail u_{n-1}`.
pub fn recurrence_coefficients(n: usize) -> (Integer, Integer, Integer) {
    let n = Integer::from(n);
    let one = Integer::one();
    let n1 = &n + &one;
    let lead = &n1 * &n1 * &n1 * &n1 * &n1;
    let mid = Integer::from(3)
        * (Integer::from(2) * &n + 1u32)
        * (Integer::from(3) * &n * &n + Integer::from(3) * &n + 1u32)
        * (Integer::from(15) * &n * &n + Integer::from(15) * &n + 4u32);
    let tail = Integer::from(3)
        * &n
        * &n
        * &n
        * (Integer::from(3) * &n - 1u32)
        * (Integer::from(3) * &n + 1u32);
    (lead, mid, tail)
}

/// One step of the recurrence, applied to `(u, v)` pairs. `n >= 1`.
pub fn recurrence_step(
    n: usize,
    prev: (&Rational, &Rational),
    cur: (&Rational, &Rational),
) -> (Rational, Rational) {
    assert!(n >= 1, "recurrence_step needs n >= 1");
    let (lead, mid, tail) = recurrence_coefficients(n);
    let lead = Rational::from_integer(lead);
    let mid = Rational::from_integer(mid);
    let tail = Rational::from_integer(tail);
    let step = |p: &Rational, c: &Rational| (&mid * c + &tail * p) / &lead;
    (step(prev.0, cur.0), step(prev.1, cur.1))
}

/// Rows `0..=max_n`.
pub fn generate(max_n: usize) -> Vec<SequenceRow> {
    let mut rows = Vec::with_capacity(max_n + 1);
    rows.push(SequenceRow {
        n: 0,
        u: rat_int(1),
        v: rat_int(0),
    });
    if max_n == 0 {
        return rows;
    }
    rows.push(SequenceRow {
        n: 1,
        u: rat_int(12),
        v: rat_int(13),
    });
    for n in 1..max_n {
        let (u, v) = recurrence_step(
            n,
            (&rows[n - 1].u, &rows[n - 1].v),
            (&rows[n].u, &rows[n].v),
        );
        rows.push(SequenceRow { n: n + 1, u, v });
    }
    rows
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityReport {
    /// `(n, u_n is an integer)` per row.
    pub rows: Vec<(usize, bool)>,
}

impl IntegralityReport {
    pub fn all_integral(&self) -> bool {
        self.rows.iter().all(|&(_, ok)| ok)
    }

    pub fn violators(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|&(n, _)| n)
            .collect()
    }
}

pub fn check_integrality(rows: &[SequenceRow]) -> IntegralityReport {
    IntegralityReport {
        rows: rows.iter().map(|r| (r.n, r.u.is_integer())).collect(),
    }
}

/// Re-evaluates `lead u_{n+1} - mid u_n - tail u_{n-1}` (and the same for `v`)
/// for every interior index. Returns the indices `n` where either residue is
/// nonzero.
pub fn recurrence_violations(rows: &[SequenceRow]) -> Vec<usize> {
    let mut bad = Vec::new();
    for w in rows.windows(3) {
        let n = w[1].n;
        let (lead, mid, tail) = recurrence_coefficients(n);
        let residue = |next: &Rational, cur: &Rational, prev: &Rational| {
            next * &lead - cur * &mid - prev * &tail
        };
        let ru = residue(&w[2].u, &w[1].u, &w[0].u);
        let rv = residue(&w[2].v, &w[1].v, &w[0].v);
        if !ru.is_zero() || !rv.is_zero() {
            bad.push(n);
        }
    }
    bad
}

/// Whether `u_{n+1}/u_n` lies strictly inside `(lo, hi)` for every `n` in
/// `range` (rows must cover `range.end`).
pub fn growth_within(rows: &[SequenceRow], range: core::ops::RangeInclusive<usize>, lo: i64, hi: i64) -> bool {
    range.into_iter().all(|n| {
        let ratio = &rows[n + 1].u / &rows[n].u;
        ratio.is_positive() && ratio > rat_int(lo) && ratio < rat_int(hi)
    })
}
