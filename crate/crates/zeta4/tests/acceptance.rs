//! Acceptance matrix: one PASS/FAIL line per criterion, each with its
//! runtime budget. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use zeta4::drivers::{self, Case};
use zeta4::sampling::parameter_sets;
use zeta4::{run, Command, RunConfig, Status};
use zeta4_core::andrews::{specialization_limit, PairChoice};
use zeta4_core::arith::rat;
use zeta4_core::diagnostics::{
    decay_report_with, decimal_width, rate_within, ratio_within_widened, zeta4_enclosure,
};
use zeta4_core::sequences::{check_integrality, generate};
use zeta4_core::sums::{check_antisymmetry, u_double_sum, u_from_epsilon_limit, SumVariant};

const ANDREWS_SEED: u64 = 20_240_611;
const ANDREWS_TRIALS: usize = 100;
const ANDREWS_M_MAX: usize = 6;
const ZETA4_DIGITS: u32 = 150;
const DECAY_MAX_N: usize = 30;

type Outcome = Result<String, String>;

/// Name, runtime budget in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn all_pass(cases: &[Case], expected: usize) -> Outcome {
    if cases.len() != expected {
        return Err(format!("{} cases, expected {expected}", cases.len()));
    }
    match cases.iter().find(|c| !c.passed()) {
        None => Ok(format!("{expected} cases")),
        Some(c) => Err(format!("{} n={} {} {}: {}", c.check, c.index, c.case, c.outcome.name(), c.detail)),
    }
}

fn initial_data() -> Outcome {
    let cfg = RunConfig {
        max_n: 1,
        ..RunConfig::new(Command::Gen)
    };
    let mut out = Vec::new();
    let report = run(&cfg, &mut out).map_err(|e| e.to_string())?;
    let text = String::from_utf8(out).unwrap();
    if report.status == Status::Pass && text == "n,u,v\n0,1,0/1\n1,12,13/1\n" {
        Ok("(u0,v0)=(1,0), (u1,v1)=(12,13)".into())
    } else {
        Err(format!("got {text:?}"))
    }
}

fn integrality() -> Outcome {
    let report = check_integrality(&generate(200));
    if report.all_integral() {
        Ok("u_n integral for n <= 200".into())
    } else {
        Err(format!("non-integral at {:?}", report.violators()))
    }
}

fn seven_way() -> Outcome {
    all_pass(&drivers::variants(&generate(25), &SumVariant::ALL), 26 * 6)
}

fn epsilon_limit() -> Outcome {
    let rows = generate(15);
    for order in 2..=4 {
        all_pass(&drivers::epsilon_limit(&rows, order), 2 * 16).map_err(|e| format!("K={order}: {e}"))?;
    }
    Ok("n <= 15, K in {2,3,4}".into())
}

fn antisymmetry() -> Outcome {
    let bad: Vec<usize> = (0..=100usize)
        .into_par_iter()
        .filter(|&n| !matches!(check_antisymmetry(n), Ok(true)))
        .collect();
    if bad.is_empty() {
        Ok("n <= 100".into())
    } else {
        Err(format!("fails at n = {bad:?}"))
    }
}

fn andrews() -> Outcome {
    for s in 1..=3 {
        let sets = parameter_sets(ANDREWS_SEED, s, ANDREWS_M_MAX, ANDREWS_TRIALS).map_err(|e| e.to_string())?;
        if let Some(p) = sets.iter().find(|p| p.m > ANDREWS_M_MAX) {
            return Err(format!("sampled m = {} > {ANDREWS_M_MAX}", p.m));
        }
        all_pass(&drivers::andrews(&sets), ANDREWS_TRIALS).map_err(|e| format!("s={s}: {e}"))?;
    }
    Ok(format!("s in {{1,2,3}}, {ANDREWS_TRIALS} sets each, seed {ANDREWS_SEED}"))
}

fn specialization() -> Outcome {
    all_pass(&drivers::specialization(8, 2), 9 * 6)?;
    if PairChoice::C1C3.variant() != SumVariant::F {
        return Err("c1c3 not mapped to F".into());
    }
    let rows = generate(8);
    for n in 0..=8 {
        let limit = specialization_limit(n, PairChoice::C1C3, 2).map_err(|e| e.to_string())?;
        let u = u_from_epsilon_limit(n, &limit);
        if u != rows[n].u || u != u_double_sum(n, SumVariant::F) {
            return Err(format!("c1c3 limit disagrees with F at n = {n}"));
        }
    }
    Ok("six choices, n <= 8, c1c3 = F".into())
}

fn convergence() -> Outcome {
    let target = decimal_width(ZETA4_DIGITS);
    let started = Instant::now();
    let z4 = zeta4_enclosure(&target).map_err(|e| e.to_string())?;
    let z4_time = started.elapsed();
    if z4.width() > target {
        return Err("ζ(4) enclosure wider than 1e-150".into());
    }
    if z4_time > Duration::from_secs(60) {
        return Err(format!("ζ(4) enclosure took {z4_time:?}"));
    }
    let rows = generate(DECAY_MAX_N);
    let report = decay_report_with(&rows, &z4).map_err(|e| e.to_string())?;
    if let Some(n) = report.first_non_decrease(2) {
        return Err(format!("|r_n| not certified decreasing at n = {n}"));
    }
    let last = report.row(DECAY_MAX_N).unwrap();
    if !rate_within(last, &rat(5, 100), &rat(15, 100)) {
        return Err("|r_30|^(1/30) outside (0.05, 0.15)".into());
    }
    if !ratio_within_widened(&rows[DECAY_MAX_N], last, &z4) {
        return Err("v_30/u_30 outside widened enclosure".into());
    }
    Ok(format!("width <= 1e-150 in {:.2}s, decay 2 <= n <= 30", z4_time.as_secs_f64()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("initial data", 1, initial_data),
        ("integrality", 10, integrality),
        ("seven-way agreement", 60, seven_way),
        ("epsilon limit", 60, epsilon_limit),
        ("antisymmetry", 30, antisymmetry),
        ("andrews identity", 120, andrews),
        ("specialization chain", 120, specialization),
        ("convergence certification", 60, convergence),
    ];
    let mut failed = 0;
    for (k, (name, budget, check)) in criteria.into_iter().enumerate() {
        let started = Instant::now();
        let result = check();
        let elapsed = started.elapsed();
        let result = match result {
            Ok(msg) if elapsed > Duration::from_secs(budget) => Err(format!("{msg}; over budget")),
            r => r,
        };
        let (tag, msg) = match &result {
            Ok(m) => ("PASS", m),
            Err(m) => ("FAIL", m),
        };
        println!(
            "{tag} criterion {}: {name} ({:.2}s / {budget}s) {msg}",
            k + 1,
            elapsed.as_secs_f64()
        );
        failed += result.is_err() as usize;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
