//! Rigorous enclosures of `ζ(4)` and of the residuals `r_n = u_n ζ(4) - v_n`.
//!
//! `ζ(4)` is enclosed from its defining series: an exact partial sum plus the
//! Euler–Maclaurin expansion of the tail `Σ_{k>=N} k^-4`. Since `x^-4` is
//! completely monotone on `(0, ∞)`, the remainder after `p` correction terms
//! has the sign of, and is no larger than, the first omitted term. Every
//! such interval is checked against the elementary integral bounds
//! `1/(3(N+1)^3) <= Σ_{k>N} k^-4 <= 1/(3N^3)` before it is returned.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed};

use crate::arith::{bernoulli_numbers, rat_int, Integer, Rational};
use crate::sequences::{generate, SequenceRow};
use crate::{Error, Result};

/// `[lo, hi]` with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval);
        }
        Ok(RationalInterval { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        RationalInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    /// Interval spanned by two points in either order.
    pub fn spanning(a: Rational, b: Rational) -> Self {
        if a <= b {
            RationalInterval { lo: a, hi: b }
        } else {
            RationalInterval { lo: b, hi: a }
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &RationalInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &RationalInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn shift(&self, x: &Rational) -> Self {
        RationalInterval {
            lo: &self.lo + x,
            hi: &self.hi + x,
        }
    }

    pub fn scale(&self, x: &Rational) -> Self {
        Self::spanning(&self.lo * x, &self.hi * x)
    }

    /// `[lo - r, hi + r]` for `r >= 0`.
    pub fn widen(&self, r: &Rational) -> Self {
        RationalInterval {
            lo: &self.lo - r,
            hi: &self.hi + r,
        }
    }

    /// Sign of every point, if the interval excludes zero.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Positive)
        } else if self.hi.is_negative() {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    /// `{|x| : x in self}`, for intervals excluding zero.
    pub fn abs(&self) -> Option<Self> {
        match self.sign()? {
            Sign::Positive => Some(self.clone()),
            Sign::Negative => Some(RationalInterval {
                lo: -&self.hi,
                hi: -&self.lo,
            }),
        }
    }

    /// Quotient of two intervals of positive numbers.
    pub fn div_positive(&self, other: &RationalInterval) -> Option<Self> {
        if !self.lo.is_positive() || !other.lo.is_positive() {
            return None;
        }
        Some(RationalInterval {
            lo: &self.lo / &other.hi,
            hi: &self.hi / &other.lo,
        })
    }

    /// Smallest interval with endpoints on the grid `10^-digits` containing
    /// `self`.
    pub fn round_outward(&self, digits: u32) -> Self {
        let scale = Rational::from_integer(num_traits::pow(Integer::from(10), digits as usize));
        RationalInterval {
            lo: (&self.lo * &scale).floor() / &scale,
            hi: (&self.hi * &scale).ceil() / &scale,
        }
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// `Σ_{k=1}^{N} k^-4`.
pub fn partial_sum(n: usize) -> Rational {
    (1..=n)
        .map(|k| {
            let k2 = Integer::from(k) * Integer::from(k);
            Rational::new(Integer::one(), &k2 * &k2)
        })
        .sum()
}

fn inv_cube_third(n: usize) -> Rational {
    let n = Integer::from(n);
    Rational::new(Integer::one(), Integer::from(3) * &n * &n * &n)
}

/// `S_N + [1/(3(N+1)^3), 1/(3N^3)]`, `N >= 1`.
pub fn crude_enclosure(n: usize) -> RationalInterval {
    assert!(n >= 1, "crude enclosure needs N >= 1");
    let s = partial_sum(n);
    RationalInterval {
        lo: &s + inv_cube_third(n + 1),
        hi: s + inv_cube_third(n),
    }
}

/// Euler–Maclaurin correction `B_{2j} (2j+1)(2j+2) / (6 N^{2j+3})`.
fn correction_term(bernoulli: &[Rational], j: usize, n: usize) -> Rational {
    let factor = rat_int(((2 * j + 1) * (2 * j + 2)) as i64) / rat_int(6);
    let power = num_traits::pow(Integer::from(n), 2 * j + 3);
    &bernoulli[2 * j] * factor / Rational::from_integer(power)
}

/// Tail sum from `N` (inclusive) by Euler–Maclaurin with `p` corrections,
/// plus the partial sum below `N`. Needs `B_0 .. B_{2p+2}`.
fn euler_maclaurin_with(n: usize, p: usize, bernoulli: &[Rational]) -> RationalInterval {
    let nn = Integer::from(n);
    let n4 = &nn * &nn * &nn * &nn;
    let mut centre = partial_sum(n - 1)
        + inv_cube_third(n)
        + Rational::new(Integer::one(), Integer::from(2) * n4);
    for j in 1..=p {
        centre += correction_term(bernoulli, j, n);
    }
    let next = correction_term(bernoulli, p + 1, n);
    RationalInterval::spanning(centre.clone(), centre + next)
}

/// Euler–Maclaurin enclosure with `p` correction terms at cut-off `N >= 1`,
/// cross-checked against [`crude_enclosure`].
pub fn euler_maclaurin_enclosure(n: usize, p: usize) -> Result<RationalInterval> {
    assert!(n >= 1, "Euler-Maclaurin cut-off needs N >= 1");
    let bernoulli = bernoulli_numbers(2 * p + 2);
    let em = euler_maclaurin_with(n, p, &bernoulli);
    if !em.intersects(&crude_enclosure(n)) {
        return Err(Error::InvalidInterval);
    }
    Ok(em)
}

/// Largest correction depth tried at one cut-off before doubling `N`.
const MAX_DEPTH: usize = 80;

/// An interval of width at most `target_width` containing `ζ(4)`. The
/// endpoints are rounded outward to a decimal grid to keep them short.
pub fn zeta4_enclosure(target_width: &Rational) -> Result<RationalInterval> {
    if !target_width.is_positive() {
        return Err(Error::InvalidParameters(alloc::format!(
            "target width must be positive, got {target_width}"
        )));
    }
    // Grid 10^-d <= target/4; rounding then adds at most target/2.
    let mut digits = 0u32;
    let mut grid = rat_int(1);
    while &grid * rat_int(4) > *target_width {
        grid /= rat_int(10);
        digits += 1;
    }
    let em_target = target_width / rat_int(2);

    let bernoulli = bernoulli_numbers(2 * MAX_DEPTH + 2);
    let mut n = 8usize;
    loop {
        let mut best: Option<Rational> = None;
        for p in 0..=MAX_DEPTH {
            let next = correction_term(&bernoulli, p + 1, n).abs();
            if let Some(prev) = &best {
                if &next >= prev {
                    break;
                }
            }
            if next <= em_target {
                let em = euler_maclaurin_with(n, p, &bernoulli);
                if !em.intersects(&crude_enclosure(n)) {
                    return Err(Error::InvalidInterval);
                }
                return Ok(em.round_outward(digits));
            }
            best = Some(next);
        }
        n *= 2;
    }
}

/// `10^-digits`.
pub fn decimal_width(digits: u32) -> Rational {
    Rational::new(
        Integer::one(),
        num_traits::pow(Integer::from(10), digits as usize),
    )
}

/// `[u_n lo - v_n, u_n hi - v_n]` for row `n`.
pub fn residual_enclosure(
    n: usize,
    rows: &[SequenceRow],
    z4: &RationalInterval,
) -> Result<RationalInterval> {
    let row = rows
        .iter()
        .find(|r| r.n == n)
        .ok_or(Error::MissingRow { n })?;
    if !row.u.is_positive() {
        return Err(Error::InvalidParameters(alloc::format!(
            "u_{n} = {} is not positive",
            row.u
        )));
    }
    let r = RationalInterval {
        lo: &row.u * &z4.lo - &row.v,
        hi: &row.u * &z4.hi - &row.v,
    };
    if r.width() > r.midpoint().abs() {
        return Err(Error::EnclosureTooLoose { n });
    }
    Ok(r)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayRow {
    pub n: usize,
    pub residual: RationalInterval,
    pub sign: Sign,
    /// Bounds on `|r_n|`.
    pub magnitude: RationalInterval,
    /// Bounds on `|r_n| / |r_{n-1}|`, from `n = 1`.
    pub ratio: Option<RationalInterval>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayReport {
    pub zeta4: RationalInterval,
    pub rows: Vec<DecayRow>,
}

impl DecayReport {
    /// `|r_n|` upper bound below `|r_{n-1}|` lower bound for every
    /// `n >= from`; returns the first failing `n`.
    pub fn first_non_decrease(&self, from: usize) -> Option<usize> {
        self.rows
            .windows(2)
            .filter(|w| w[1].n >= from)
            .find(|w| w[1].magnitude.hi() >= w[0].magnitude.lo())
            .map(|w| w[1].n)
    }

    pub fn strictly_decreasing_from(&self, from: usize) -> bool {
        self.first_non_decrease(from).is_none()
    }

    pub fn row(&self, n: usize) -> Option<&DecayRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.rows.iter().map(|r| r.sign).collect()
    }
}

/// Digits of the `ζ(4)` enclosure used by [`decay_report`]: at least 150,
/// and enough that `u_n · width` stays far below `|r_n|`.
pub fn auto_enclosure_digits(max_n: usize) -> u32 {
    // u_n ≈ 270^n, |r_n| ≈ 0.1^n: need about 3.5 n digits.
    150u32.max((7 * max_n as u32).div_ceil(2) + 20)
}

/// Certified residual table for `n = 0..=max_n`.
pub fn decay_report(max_n: usize) -> Result<DecayReport> {
    let z4 = zeta4_enclosure(&decimal_width(auto_enclosure_digits(max_n)))?;
    decay_report_with(&generate(max_n), &z4)
}

pub fn decay_report_with(rows: &[SequenceRow], z4: &RationalInterval) -> Result<DecayReport> {
    let mut out: Vec<DecayRow> = Vec::with_capacity(rows.len());
    for row in rows {
        let residual = residual_enclosure(row.n, rows, z4)?;
        let sign = residual.sign().ok_or(Error::EnclosureTooLoose { n: row.n })?;
        let magnitude = residual.abs().ok_or(Error::EnclosureTooLoose { n: row.n })?;
        let ratio = out
            .last()
            .and_then(|prev| magnitude.div_positive(&prev.magnitude));
        out.push(DecayRow {
            n: row.n,
            residual,
            sign,
            magnitude,
            ratio,
        });
    }
    Ok(DecayReport {
        zeta4: z4.clone(),
        rows: out,
    })
}

/// `|r_n|` strictly between `lo^n` and `hi^n`, i.e. `|r_n|^(1/n)` in `(lo, hi)`.
pub fn rate_within(row: &DecayRow, lo: &Rational, hi: &Rational) -> bool {
    let k = row.n;
    let lo_k = num_traits::pow(lo.clone(), k);
    let hi_k = num_traits::pow(hi.clone(), k);
    &lo_k < row.magnitude.lo() && row.magnitude.hi() < &hi_k
}

/// `v_n / u_n` inside `z4` widened by `max |r_n| / u_n`.
pub fn ratio_within_widened(row: &SequenceRow, decay: &DecayRow, z4: &RationalInterval) -> bool {
    let slack = decay.magnitude.hi() / &row.u;
    z4.widen(&slack).contains(&(&row.v / &row.u))
}

/// Positive denominator and coprime parts.
pub fn is_normalized(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}
