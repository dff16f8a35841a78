//! Per-case verification drivers. Work is split per `n` (or per trial) and
//! run on the current rayon pool; results come back in input order.

use rayon::prelude::*;
use zeta4_core::andrews::{verify_andrews, verify_specialization, AndrewsParams, PairChoice};
use zeta4_core::arith::BinomialTable;
use zeta4_core::sequences::SequenceRow;
use zeta4_core::sums::{
    check_antisymmetry, epsilon_limit_sum, u_double_sum_with, u_from_epsilon_limit, u_harmonic_sum,
    verify_identity5, SumVariant,
};
use zeta4_core::{Error, Rational};

use crate::format::{integer_or_rational, rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Pole,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Pole => "pole",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub check: &'static str,
    /// `n`, or the trial number for random parameters.
    pub index: usize,
    pub case: String,
    pub outcome: Outcome,
    pub detail: String,
}

impl Case {
    fn new(check: &'static str, index: usize, case: impl Into<String>) -> Self {
        Case {
            check,
            index,
            case: case.into(),
            outcome: Outcome::Pass,
            detail: String::new(),
        }
    }

    fn judged(mut self, ok: bool, detail: impl FnOnce() -> String) -> Self {
        if !ok {
            self.outcome = Outcome::Fail;
            self.detail = detail();
        }
        self
    }

    fn errored(mut self, err: &Error) -> Self {
        self.outcome = if err.is_pole() { Outcome::Pole } else { Outcome::Fail };
        self.detail = err.to_string();
        self
    }

    fn settle(self, r: Result<bool, Error>, detail: impl FnOnce() -> String) -> Self {
        match r {
            Ok(ok) => self.judged(ok, detail),
            Err(e) => self.errored(&e),
        }
    }

    fn with_detail(mut self, detail: String) -> Self {
        if self.detail.is_empty() {
            self.detail = detail;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

fn per_index<T: Sync>(items: &[T], f: impl Fn(&T) -> Vec<Case> + Sync + Send) -> Vec<Case> {
    items.par_iter().map(f).collect::<Vec<_>>().into_iter().flatten().collect()
}

/// For each row and each selected variant: double sum, harmonic sum and the
/// recurrence value coincide.
pub fn variants(rows: &[SequenceRow], selected: &[SumVariant]) -> Vec<Case> {
    per_index(rows, |row| {
        let n = row.n;
        let table = BinomialTable::new(4 * n + 2);
        let harmonic = u_harmonic_sum(n);
        selected
            .iter()
            .map(|&v| {
                let double = Rational::from_integer(u_double_sum_with(&table, n, v));
                let ok = double == row.u && harmonic == row.u;
                Case::new("variants", n, v.name()).judged(ok, || {
                    format!(
                        "double sum {} harmonic sum {} recurrence {}",
                        integer_or_rational(&double),
                        integer_or_rational(&harmonic),
                        integer_or_rational(&row.u)
                    )
                })
            })
            .collect()
    })
}

pub fn identity5(max_n: usize) -> Vec<Case> {
    let ns: Vec<usize> = (0..=max_n).collect();
    per_index(&ns, |&n| {
        vec![Case::new("identity5", n, "F").judged(verify_identity5(n), || {
            "double sum differs from harmonic sum".to_owned()
        })]
    })
}

/// Antisymmetry of `A_l(0)` and the recovered `u_n` from the `ε`-limit at
/// jet order `order`.
pub fn epsilon_limit(rows: &[SequenceRow], order: usize) -> Vec<Case> {
    per_index(rows, |row| {
        let n = row.n;
        let anti = Case::new("antisymmetry", n, "").settle(check_antisymmetry(n), || {
            "A_l(0) + A_(n-l)(0) nonzero".to_owned()
        });
        let limit = Case::new("epsilon-limit", n, format!("K={order}"));
        let limit = match epsilon_limit_sum(n, order) {
            Ok(l) => {
                let u = u_from_epsilon_limit(n, &l);
                limit.judged(u == row.u, || {
                    format!(
                        "limit gives {} recurrence {}",
                        integer_or_rational(&u),
                        integer_or_rational(&row.u)
                    )
                })
            }
            Err(e) => limit.errored(&e),
        };
        vec![anti, limit]
    })
}

pub fn describe_params(p: &AndrewsParams<Rational>) -> String {
    let list = |xs: &[Rational]| xs.iter().map(rational).collect::<Vec<_>>().join(" ");
    format!("a={} b=[{}] c=[{}] m={}", rational(&p.a), list(&p.b), list(&p.c), p.m)
}

pub fn andrews(sets: &[AndrewsParams<Rational>]) -> Vec<Case> {
    let indexed: Vec<(usize, &AndrewsParams<Rational>)> = sets.iter().enumerate().collect();
    per_index(&indexed, |&(trial, p)| {
        let mut case = Case::new("andrews", trial, format!("s={} m={}", p.s(), p.m))
            .settle(verify_andrews(p), || "sides differ".to_owned());
        let params = describe_params(p);
        case.detail = if case.detail.is_empty() {
            params
        } else {
            format!("{}; {params}", case.detail)
        };
        vec![case]
    })
}

pub fn specialization(max_n: usize, order: usize) -> Vec<Case> {
    let work: Vec<(usize, PairChoice)> = (0..=max_n)
        .flat_map(|n| PairChoice::ALL.into_iter().map(move |c| (n, c)))
        .collect();
    per_index(&work, |&(n, choice)| {
        vec![Case::new("specialization", n, choice.name())
            .settle(verify_specialization(n, choice, order), || {
                format!("limit disagrees with variant {}", choice.variant())
            })
            .with_detail(format!("variant {}", choice.variant()))]
    })
}
