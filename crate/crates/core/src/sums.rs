//! Closed-form representations of `u_n`.
//!
//! - [`u_harmonic_sum`]: the single sum over `l` with harmonic numbers.
//! - [`epsilon_terms`] / [`epsilon_limit_sum`]: the perturbed family
//!   `A_l(ε)` and the exact value of `lim (1/ε) Σ_l A_l(ε)`.
//! - [`u_double_sum`]: six double sums over `i, j`, all with integer terms.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{
    binomial, harmonic_table, rat, rat_int, sign_power, BinomialTable, Integer, Rational, Scalar,
};
use crate::jet::Jet;
use crate::{Error, Result};

/// Which double-sum representation of `u_n`.
///
/// `F` is the sum with all-positive terms; `V1..V5` are the five alternatives
/// in the order they are usually listed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SumVariant {
    F,
    V1,
    V2,
    V3,
    V4,
    V5,
}

impl SumVariant {
    pub const ALL: [SumVariant; 6] = [
        SumVariant::F,
        SumVariant::V1,
        SumVariant::V2,
        SumVariant::V3,
        SumVariant::V4,
        SumVariant::V5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SumVariant::F => "F",
            SumVariant::V1 => "V1",
            SumVariant::V2 => "V2",
            SumVariant::V3 => "V3",
            SumVariant::V4 => "V4",
            SumVariant::V5 => "V5",
        }
    }
}

impl fmt::Display for SumVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SumVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SumVariant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameters(alloc::format!("unknown sum variant {s:?}")))
    }
}

/// `C(n,l)^4 C(n+l,n)^2 C(2n-l,n)^2`.
pub fn binomial_core_product(n: usize, l: usize) -> Integer {
    let (n, l) = (n as i64, l as i64);
    let a = binomial(n, l);
    let b = binomial(n + l, n);
    let c = binomial(2 * n - l, n);
    let a2 = &a * &a;
    &a2 * &a2 * &b * &b * &c * &c
}

/// `1/(n/2 - l) - 6H_{n-l} + 6H_l - 2H_{n+l} + 2H_{2n-l}`, undefined at `l = n/2`.
pub fn harmonic_bracket(n: usize, l: usize) -> Option<Rational> {
    let shift = rat(n as i64, 2) - rat_int(l as i64);
    if shift.is_zero() {
        return None;
    }
    let h = harmonic_table(2 * n);
    Some(shift.recip() + harmonic_combination(&h, n, l))
}

/// `-6H_{n-l} + 6H_l - 2H_{n+l} + 2H_{2n-l}`.
fn harmonic_combination(h: &[Rational], n: usize, l: usize) -> Rational {
    rat_int(6) * (&h[l] - &h[n - l]) + rat_int(2) * (&h[2 * n - l] - &h[n + l])
}

/// `u_n` from the harmonic-number sum, with each term in the form
/// `P + (n/2 - l) (-6H_{n-l} + 6H_l - 2H_{n+l} + 2H_{2n-l}) P`,
/// `P` the binomial core product, so `l = n/2` needs no special case.
pub fn u_harmonic_sum(n: usize) -> Rational {
    let h = harmonic_table(2 * n);
    let half_n = rat(n as i64, 2);
    let mut total = Rational::zero();
    for l in 0..=n {
        let core = Rational::from_integer(binomial_core_product(n, l));
        let shift = &half_n - rat_int(l as i64);
        let factor = Rational::one() + shift * harmonic_combination(&h, n, l);
        total += core * factor;
    }
    total * rat_int(sign_power(n))
}

/// One member `A_l(ε)` of the perturbed family, as a jet.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonTerm {
    pub n: usize,
    pub l: usize,
    pub value: Jet,
}

impl EpsilonTerm {
    pub fn at_zero(&self) -> &Rational {
        self.value.constant_term()
    }
}

/// `A_l(ε)` evaluated at `eps`, which may be a jet (the formal variable) or a
/// concrete rational:
///
/// ```text
/// (n/2 + ε - l) (-n-2ε)_l/(1)_l (-n)_l/(1-2ε)_l ((1+n-ε)_l/(-2n-ε)_l)^2 ((-n-ε)_l/(1-ε)_l)^4
/// ```
pub fn epsilon_family_at<S: Scalar>(n: usize, l: usize, eps: &S) -> Result<S> {
    let ni = n as i64;
    let one = eps.one_like();
    let two_eps = eps.add_ref(eps);
    let ratio = |num: &S, den: &S| -> Result<S> {
        crate::arith::pochhammer(num, l).try_div(&crate::arith::pochhammer(den, l))
    };
    let lin = eps.add_rational(&(rat(ni, 2) - rat_int(l as i64)));
    let r1 = ratio(&two_eps.neg_ref().add_integer(-ni), &one)?;
    let r2 = ratio(&one.scale(&rat_int(-ni)), &one.sub_ref(&two_eps))?;
    let r3 = ratio(&eps.neg_ref().add_integer(1 + ni), &eps.neg_ref().add_integer(-2 * ni))?;
    let r4 = ratio(&eps.neg_ref().add_integer(-ni), &one.sub_ref(eps))?;
    let r3sq = r3.mul_ref(&r3);
    let r4sq = r4.mul_ref(&r4);
    Ok(lin
        .mul_ref(&r1)
        .mul_ref(&r2)
        .mul_ref(&r3sq)
        .mul_ref(&r4sq.mul_ref(&r4sq)))
}

/// `A_l(ε)` as a jet of the given order, evaluated directly.
pub fn epsilon_term(n: usize, l: usize, order: usize) -> Result<EpsilonTerm> {
    if l > n {
        return Err(Error::InvalidParameters(alloc::format!(
            "epsilon term index l = {l} exceeds n = {n}"
        )));
    }
    let eps = Jet::epsilon(order)?;
    Ok(EpsilonTerm {
        n,
        l,
        value: epsilon_family_at(n, l, &eps)?,
    })
}

/// All of `A_0(ε), ..., A_n(ε)`, advancing the Pochhammer ratios one factor
/// at a time instead of rebuilding them for each `l`.
pub fn epsilon_terms(n: usize, order: usize) -> Result<Vec<EpsilonTerm>> {
    let eps = Jet::epsilon(order)?;
    let ni = n as i64;
    let one = eps.one_like();
    let two_eps = &eps + &eps;
    let neg_eps = -&eps;
    // Numerator bases with multiplicities, then denominator bases.
    let num_bases: [(Jet, u32); 4] = [
        ((-&two_eps).add_integer(-ni), 1),
        (one.scale(&rat_int(-ni)), 1),
        (neg_eps.add_integer(1 + ni), 2),
        (neg_eps.add_integer(-ni), 4),
    ];
    let den_bases: [(Jet, u32); 4] = [
        (one.clone(), 1),
        (&one - &two_eps, 1),
        (neg_eps.add_integer(-2 * ni), 2),
        (&one - &eps, 4),
    ];
    let half_n = rat(ni, 2);
    let mut product = one.clone();
    let mut out = Vec::with_capacity(n + 1);
    for l in 0..=n {
        if l > 0 {
            let k = (l - 1) as i64;
            let step = |bases: &[(Jet, u32)]| {
                let mut acc = one.clone();
                for (base, mult) in bases {
                    let f = base.add_integer(k);
                    for _ in 0..*mult {
                        acc = &acc * &f;
                    }
                }
                acc
            };
            product = &product * &step(&num_bases).checked_div(&step(&den_bases))?;
        }
        let lin = eps.add_rational(&(&half_n - rat_int(l as i64)));
        out.push(EpsilonTerm {
            n,
            l,
            value: &lin * &product,
        });
    }
    Ok(out)
}

/// `lim_{ε->0} (1/ε) Σ_l A_l(ε)`.
///
/// Fails with [`Error::DivergentLimit`] unless `Σ_l A_l(0) = 0` exactly.
/// The value equals `(-1)^n u_n / C(2n,n)^2`.
pub fn epsilon_limit_sum(n: usize, order: usize) -> Result<Rational> {
    let terms = epsilon_terms(n, order)?;
    let mut total = Jet::constant(Rational::zero(), order)?;
    for t in &terms {
        total = &total + &t.value;
    }
    total.limit_after_epsilon_division()
}

/// Converts `lim (1/ε) Σ A_l(ε)` back to `u_n`.
pub fn u_from_epsilon_limit(n: usize, limit: &Rational) -> Rational {
    let c = Rational::from_integer(binomial(2 * n as i64, n as i64));
    limit * &c * &c * rat_int(sign_power(n))
}

/// `A_l(0) = -A_{n-l}(0)` for every `l`.
pub fn check_antisymmetry(n: usize) -> Result<bool> {
    let terms = epsilon_terms(n, crate::jet::MIN_ORDER)?;
    Ok(antisymmetric(&terms))
}

pub(crate) fn antisymmetric(terms: &[EpsilonTerm]) -> bool {
    let n = terms.len() - 1;
    (0..=n).all(|l| *terms[l].at_zero() == -terms[n - l].at_zero())
}

/// `u_n` through one of the six double sums. `i` and `j` both run over
/// `0..=3n+1`; out-of-range binomials are zero.
pub fn u_double_sum(n: usize, variant: SumVariant) -> Rational {
    let table = BinomialTable::new(4 * n + 2);
    Rational::from_integer(u_double_sum_with(&table, n, variant))
}

/// [`u_double_sum`] against a caller-provided table with at least `4n+2` rows.
pub fn u_double_sum_with(table: &BinomialTable, n: usize, variant: SumVariant) -> Integer {
    assert!(table.max_row() > 4 * n, "binomial table too small");
    let c = |p: i64, q: i64| table.get(p, q);
    let n = n as i64;
    let top = 3 * n + 1;
    let alt = |k: i64| if k % 2 == 0 { 1 } else { -1 };
    let mut total = Integer::zero();

    let mut outer = |outer_term: &dyn Fn(i64) -> Integer, inner_term: &dyn Fn(i64, i64) -> Integer| {
        for i in 0..=top {
            let o = outer_term(i);
            if o.is_zero() {
                continue;
            }
            let mut inner = Integer::zero();
            for j in 0..=top {
                inner += inner_term(i, j);
            }
            total += o * inner;
        }
    };

    match variant {
        SumVariant::F => outer(
            &|i| c(n, i) * c(n, i) * c(2 * n - i, n),
            &|i, j| c(n, j) * c(n, j) * c(n + j, n) * c(n + j - i, n),
        ),
        SumVariant::V1 => outer(
            &|i| c(top, i) * c(2 * n - i, n) * c(2 * n - i, n) * alt(i),
            &|i, j| c(n + j - i, n) * c(n, j) * c(n, j) * c(2 * n - j, n),
        ),
        SumVariant::V2 => outer(
            &|i| {
                let b = c(n + i, n);
                b * b * b * alt(i)
            },
            &|i, j| {
                let b = c(2 * n - j, n);
                c(top, j - i) * b * b * b * alt(j)
            },
        ),
        SumVariant::V3 => outer(
            &|i| c(n, i) * c(n, i) * c(n + i, n) * alt(n),
            &|i, j| c(n + j - i, n) * c(n + j, n) * c(n + j, n) * c(top, n - j) * alt(j),
        ),
        SumVariant::V4 => outer(
            &|i| c(n, i) * c(n + i, n) * c(2 * n - i, n),
            &|i, j| c(n, j - i) * c(n, j) * c(2 * n - j, n) * c(2 * n - j, n),
        ),
        SumVariant::V5 => outer(
            &|i| c(n, i) * c(n + i, n) * c(n + i, n),
            &|i, j| c(n, j - i) * c(n, j) * c(n + j, n) * c(2 * n - j, n),
        ),
    }
    total
}

/// Compares the harmonic-number sum against the all-positive double sum.
pub fn verify_identity5(n: usize) -> bool {
    let sign = rat_int(sign_power(n));
    u_harmonic_sum(n) * &sign == u_double_sum(n, SumVariant::F) * &sign
}
