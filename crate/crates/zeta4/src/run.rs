//! Command execution: builds the table for a [`RunConfig`] and writes it.

use std::io::{self, Write};

use zeta4_core::diagnostics::{
    auto_enclosure_digits, decay_report_with, decimal_width, zeta4_enclosure, DecayReport,
};
use zeta4_core::sequences::{check_integrality, generate};
use zeta4_core::Error;

use crate::config::{Command, RunConfig, Threads, VerifyKind};
use crate::drivers::{self, Case, Outcome};
use crate::format::{decimal, integer_or_rational, rational, Cell, Rounding, Table};
use crate::sampling::parameter_sets;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Failure,
    Pole,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Failure => 2,
            Status::Pole => 3,
        }
    }
}

/// Outcome of a command whose table was written successfully.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub status: Status,
    /// One-line human summary (the binary prints it to stderr).
    pub summary: String,
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("writing output: {0}")]
    Io(#[from] io::Error),
    #[error("degenerate input: {0}")]
    Degenerate(Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl RunError {
    pub fn code(&self) -> i32 {
        match self {
            RunError::Degenerate(_) => 3,
            RunError::Io(_) | RunError::Pool(_) => 1,
        }
    }
}

/// Runs `cfg` on a dedicated pool and writes its table to `out`.
pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> Result<Report, RunError> {
    let threads = match cfg.threads {
        Threads::Auto => 0,
        Threads::Fixed(k) => k,
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
    let (table, report) = pool.install(|| build(cfg))?;
    table.write(cfg.format, out)?;
    Ok(report)
}

fn build(cfg: &RunConfig) -> Result<(Table, Report), RunError> {
    match cfg.command {
        Command::Gen => Ok(gen_table(cfg.max_n)),
        Command::Verify(kind) => verify_table(cfg, kind),
        Command::Residuals => residual_table(cfg),
    }
}

fn gen_table(max_n: usize) -> (Table, Report) {
    let rows = generate(max_n);
    let mut table = Table::new(&["n", "u", "v"]);
    for row in &rows {
        table.push(vec![
            Cell::Index(row.n),
            integer_or_rational(&row.u).into(),
            rational(&row.v).into(),
        ]);
    }
    let bad = check_integrality(&rows).violators();
    let report = if bad.is_empty() {
        Report {
            status: Status::Pass,
            summary: format!("u_n integral for all 0 <= n <= {max_n}"),
        }
    } else {
        Report {
            status: Status::Failure,
            summary: format!("u_n not integral at n = {bad:?}"),
        }
    };
    (table, report)
}

pub fn verify_cases(cfg: &RunConfig, kind: VerifyKind) -> Result<Vec<Case>, RunError> {
    Ok(match kind {
        VerifyKind::Variants => drivers::variants(&generate(cfg.max_n), &cfg.selected_variants()),
        VerifyKind::Identity5 => drivers::identity5(cfg.max_n),
        VerifyKind::EpsilonLimit => drivers::epsilon_limit(&generate(cfg.max_n), cfg.jet_order),
        VerifyKind::Andrews => {
            let sets = parameter_sets(cfg.seed, cfg.s, cfg.m_max, cfg.trials)
                .map_err(RunError::Degenerate)?;
            drivers::andrews(&sets)
        }
        VerifyKind::Specialization => drivers::specialization(cfg.max_n, cfg.jet_order),
    })
}

fn verify_table(cfg: &RunConfig, kind: VerifyKind) -> Result<(Table, Report), RunError> {
    let cases = verify_cases(cfg, kind)?;
    let mut table = Table::new(&["check", "n", "case", "result", "detail"]);
    for c in &cases {
        table.push(vec![
            c.check.into(),
            Cell::Index(c.index),
            c.case.clone().into(),
            c.outcome.name().into(),
            c.detail.clone().into(),
        ]);
    }
    let count = |o: Outcome| cases.iter().filter(|c| c.outcome == o).count();
    let (pass, fail, pole) = (count(Outcome::Pass), count(Outcome::Fail), count(Outcome::Pole));
    let status = if pole > 0 {
        Status::Pole
    } else if fail > 0 {
        Status::Failure
    } else {
        Status::Pass
    };
    let summary = format!("verify {}: {pass} passed, {fail} failed, {pole} poles", kind.name());
    Ok((table, Report { status, summary }))
}

pub fn residual_report(cfg: &RunConfig) -> Result<DecayReport, RunError> {
    let width = match &cfg.enclosure_width {
        Some(w) => w.clone(),
        None => decimal_width(auto_enclosure_digits(cfg.max_n)),
    };
    let z4 = zeta4_enclosure(&width).map_err(RunError::Degenerate)?;
    decay_report_with(&generate(cfg.max_n), &z4).map_err(RunError::Degenerate)
}

fn residual_table(cfg: &RunConfig) -> Result<(Table, Report), RunError> {
    let report = residual_report(cfg)?;
    let mut table = Table::new(&[
        "n",
        "sign",
        "abs_lower",
        "abs_upper",
        "ratio_lower",
        "ratio_upper",
        "residual_lower",
        "residual_upper",
    ]);
    for row in &report.rows {
        let (ratio_lo, ratio_hi) = match &row.ratio {
            Some(r) => (
                decimal(r.lo(), Rounding::Down).into(),
                decimal(r.hi(), Rounding::Up).into(),
            ),
            None => (Cell::Empty, Cell::Empty),
        };
        table.push(vec![
            Cell::Index(row.n),
            row.sign.symbol().to_string().into(),
            decimal(row.magnitude.lo(), Rounding::Down).into(),
            decimal(row.magnitude.hi(), Rounding::Up).into(),
            ratio_lo,
            ratio_hi,
            rational(row.residual.lo()).into(),
            rational(row.residual.hi()).into(),
        ]);
    }
    let width = decimal(&report.zeta4.width(), Rounding::Up);
    let summary = match report.first_non_decrease(2) {
        None if cfg.max_n < 2 => Report {
            status: Status::Pass,
            summary: format!("ζ(4) enclosure width {width}; no |r_n| pair with n >= 2 to compare"),
        },
        None => Report {
            status: Status::Pass,
            summary: format!(
                "ζ(4) enclosure width {width}; |r_n| strictly decreasing for 2 <= n <= {}",
                cfg.max_n
            ),
        },
        Some(n) => Report {
            status: Status::Failure,
            summary: format!("ζ(4) enclosure width {width}; |r_n| not certified decreasing at n = {n}"),
        },
    };
    Ok((table, summary))
}
