//! Andrews's multiple series transformation at `q = 1`.
//!
//! For `s >= 1` and a non-negative integer `m`, the terminating
//! very-well-poised series
//!
//! ```text
//! 2s+3 F 2s+2 ( a, 1+a/2, b_1, c_1, ..., b_s, c_s, -m
//!                 a/2, 1+a-b_1, 1+a-c_1, ..., 1+a-b_s, 1+a-c_s, 1+a+m ; 1 )
//! ```
//!
//! equals
//!
//! ```text
//! (1+a)_m (1+a-b_s-c_s)_m / ((1+a-b_s)_m (1+a-c_s)_m)
//!   Σ_{l_1..l_{s-1}} Π_k (1+a-b_k-c_k)_{l_k} (b_{k+1})_{L_k} (c_{k+1})_{L_k}
//!                        / (l_k! (1+a-b_k)_{L_k} (1+a-c_k)_{L_k})
//!                  × (-m)_{L} / (b_s+c_s-a-m)_{L}
//! ```
//!
//! with `L_k = l_1 + ... + l_k` and `L = L_{s-1}`. Both sides are evaluated
//! here over any [`Scalar`] ring.
//!
//! Over jets, denominators may vanish at `ε = 0` (the very-well-poised
//! `(a/2)_l` does for the specializations below). Each side is then evaluated
//! at a raised order covering the total valuation of its denominators and
//! truncated afterwards, so the returned jet is exact to its nominal order.
//! This treats the jet parameters as exact polynomials in `ε`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::arith::{pochhammer, pochhammer_table, rat, rat_int, Rational, Scalar};
use crate::jet::Jet;
use crate::sums::{u_double_sum, u_from_epsilon_limit, SumVariant};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct AndrewsParams<S> {
    pub a: S,
    pub b: Vec<S>,
    pub c: Vec<S>,
    pub m: usize,
}

/// One term of a hypergeometric sum.
#[derive(Debug, Clone, PartialEq)]
pub struct HypergeometricTerm<S> {
    pub l: usize,
    pub value: S,
}

impl<S: Scalar> AndrewsParams<S> {
    pub fn new(a: S, b: Vec<S>, c: Vec<S>, m: usize) -> Result<Self> {
        if b.is_empty() || b.len() != c.len() {
            return Err(Error::InvalidParameters(format!(
                "need s >= 1 and |b| = |c|, got |b| = {}, |c| = {}",
                b.len(),
                c.len()
            )));
        }
        Ok(AndrewsParams { a, b, c, m })
    }

    /// Builds from the interleaved list `b_1, c_1, ..., b_s, c_s`.
    pub fn from_group(a: S, group: Vec<S>, m: usize) -> Result<Self> {
        if !group.len().is_multiple_of(2) {
            return Err(Error::InvalidParameters(format!(
                "parameter group has odd length {}",
                group.len()
            )));
        }
        let mut b = Vec::with_capacity(group.len() / 2);
        let mut c = Vec::with_capacity(group.len() / 2);
        for pair in group.chunks(2) {
            b.push(pair[0].clone());
            c.push(pair[1].clone());
        }
        Self::new(a, b, c, m)
    }

    pub fn s(&self) -> usize {
        self.b.len()
    }

    /// `b_1, c_1, ..., b_s, c_s`.
    pub fn group(&self) -> Vec<S> {
        self.b
            .iter()
            .zip(&self.c)
            .flat_map(|(b, c)| [b.clone(), c.clone()])
            .collect()
    }

    fn map(&self, f: impl Fn(&S) -> S) -> Self {
        AndrewsParams {
            a: f(&self.a),
            b: self.b.iter().map(&f).collect(),
            c: self.c.iter().map(&f).collect(),
            m: self.m,
        }
    }

    fn one_plus_a(&self) -> S {
        self.a.add_integer(1)
    }
}

/// A Pochhammer slot: a named base and its rising factorials.
struct Slot<S> {
    name: String,
    table: Vec<S>,
}

impl<S: Scalar> Slot<S> {
    fn new(name: impl Into<String>, base: &S, len: usize) -> Self {
        Slot {
            name: name.into(),
            table: pochhammer_table(base, len),
        }
    }

    fn at(&self, l: usize) -> &S {
        &self.table[l]
    }

    /// First `l` whose `(base)_l` has picked up a factor vanishing at ε = 0.
    fn first_vanishing(&self) -> Option<usize> {
        let base = &self.table[1];
        (0..self.table.len() - 1)
            .find(|&k| base.add_integer(k as i64).valuation() != Some(0))
            .map(|k| k + 1)
    }
}

/// Total valuation of the denominator factors `base + k`, `k < len`.
/// Identically zero factors are poles.
fn denominator_guard<S: Scalar>(dens: &[(String, S)], len: usize) -> Result<usize> {
    let mut guard = 0;
    for (name, base) in dens {
        for k in 0..len {
            match base.add_integer(k as i64).valuation() {
                Some(v) => guard += v,
                None => {
                    return Err(Error::ParameterPole {
                        parameter: name.clone(),
                        index: k + 1,
                    })
                }
            }
        }
    }
    Ok(guard)
}

fn pole_at<S: Scalar>(dens: &[&Slot<S>], l: usize, err: Error) -> Error {
    if !err.is_pole() {
        return err;
    }
    dens.iter()
        .filter_map(|s| s.first_vanishing().filter(|&k| k <= l).map(|_| s.name.clone()))
        .next()
        .map(|parameter| Error::ParameterPole { parameter, index: l })
        .unwrap_or(err)
}

fn lhs_denominators<S: Scalar>(p: &AndrewsParams<S>) -> Vec<(String, S)> {
    let one_a = p.one_plus_a();
    let mut dens = Vec::with_capacity(2 * p.s() + 2);
    dens.push((String::from("a/2"), p.a.scale(&rat(1, 2))));
    for (k, (b, c)) in p.b.iter().zip(&p.c).enumerate() {
        dens.push((format!("1+a-b{}", k + 1), one_a.sub_ref(b)));
        dens.push((format!("1+a-c{}", k + 1), one_a.sub_ref(c)));
    }
    dens.push((String::from("1+a+m"), one_a.add_integer(p.m as i64)));
    dens
}

/// Terms `l = 0..=bound` of the left side; terms past `m` are zero.
pub fn andrews_lhs_terms<S: Scalar>(
    p: &AndrewsParams<S>,
    bound: usize,
) -> Result<Vec<HypergeometricTerm<S>>> {
    let live = bound.min(p.m);
    let guard = denominator_guard(&lhs_denominators(p), live)?;
    let q = p.map(|x| x.raise_order(guard));

    let half_a = q.a.scale(&rat(1, 2));
    let one = q.a.one_like();
    let mut nums = vec_slots(&[
        ("a", q.a.clone()),
        ("-m", one.scale(&rat_int(-(p.m as i64)))),
    ], live);
    for (k, (b, c)) in q.b.iter().zip(&q.c).enumerate() {
        nums.push(Slot::new(format!("b{}", k + 1), b, live));
        nums.push(Slot::new(format!("c{}", k + 1), c, live));
    }
    let vwp_num = Slot::new("1+a/2", &half_a.add_integer(1), live);
    let vwp_den = Slot::new("a/2", &half_a, live);
    let mut dens: Vec<Slot<S>> = lhs_denominators(&q)
        .into_iter()
        .filter(|(name, _)| name != "a/2")
        .map(|(name, base)| Slot::new(name, &base, live))
        .collect();
    dens.push(Slot::new("1", &one, live));

    let mut out = Vec::with_capacity(bound + 1);
    for l in 0..=bound {
        if l > live {
            out.push(HypergeometricTerm {
                l,
                value: p.a.zero_like(),
            });
            continue;
        }
        let vwp = vwp_num
            .at(l)
            .try_div(vwp_den.at(l))
            .map_err(|e| pole_at(&[&vwp_den], l, e))?;
        let num = nums.iter().fold(vwp, |acc, s| acc.mul_ref(s.at(l)));
        let den = dens.iter().fold(one.clone(), |acc, s| acc.mul_ref(s.at(l)));
        let refs: Vec<&Slot<S>> = dens.iter().collect();
        let value = num.try_div(&den).map_err(|e| pole_at(&refs, l, e))?;
        out.push(HypergeometricTerm {
            l,
            value: value.lower_order(guard),
        });
    }
    Ok(out)
}

fn vec_slots<S: Scalar>(items: &[(&str, S)], len: usize) -> Vec<Slot<S>> {
    items
        .iter()
        .map(|(name, base)| Slot::new(*name, base, len))
        .collect()
}

/// Left side: the terminating very-well-poised series.
pub fn andrews_lhs<S: Scalar>(p: &AndrewsParams<S>) -> Result<S> {
    andrews_lhs_with_bound(p, p.m)
}

/// Left side summed over `l = 0..=bound`; any `bound >= m` gives the same value.
pub fn andrews_lhs_with_bound<S: Scalar>(p: &AndrewsParams<S>, bound: usize) -> Result<S> {
    let terms = andrews_lhs_terms(p, bound)?;
    Ok(terms
        .iter()
        .fold(p.a.zero_like(), |acc, t| acc.add_ref(&t.value)))
}

fn rhs_denominators<S: Scalar>(p: &AndrewsParams<S>) -> Vec<(String, S)> {
    let s = p.s();
    let one_a = p.one_plus_a();
    let mut dens = Vec::with_capacity(2 * s + 1);
    for k in 0..s {
        dens.push((format!("1+a-b{}", k + 1), one_a.sub_ref(&p.b[k])));
        dens.push((format!("1+a-c{}", k + 1), one_a.sub_ref(&p.c[k])));
    }
    let tail = p.b[s - 1]
        .add_ref(&p.c[s - 1])
        .sub_ref(&p.a)
        .add_integer(-(p.m as i64));
    dens.push((String::from("b_s+c_s-a-m"), tail));
    dens
}

struct RhsTables<S> {
    /// `(1+a-b_k-c_k)` for `k < s-1`, indexed by `l_k`.
    balance: Vec<Slot<S>>,
    /// `(b_{k+1})`, `(c_{k+1})` for `k < s-1`, indexed by `L_k`.
    upper_b: Vec<Slot<S>>,
    upper_c: Vec<Slot<S>>,
    /// `(1+a-b_k)`, `(1+a-c_k)` for all `k`, indexed by `L_k` (or `m`).
    lower_b: Vec<Slot<S>>,
    lower_c: Vec<Slot<S>>,
    neg_m: Slot<S>,
    tail: Slot<S>,
    factorial: Slot<S>,
}

/// Right side: prefactor times the `(s-1)`-fold nested sum.
pub fn andrews_rhs<S: Scalar>(p: &AndrewsParams<S>) -> Result<S> {
    let m = p.m;
    let s = p.s();
    let guard = denominator_guard(&rhs_denominators(p), m)?;
    let q = p.map(|x| x.raise_order(guard));
    let one = q.a.one_like();
    let one_a = q.one_plus_a();

    let dens = rhs_denominators(&q);
    let tables = RhsTables {
        balance: (0..s - 1)
            .map(|k| {
                Slot::new(
                    format!("1+a-b{0}-c{0}", k + 1),
                    &one_a.sub_ref(&q.b[k]).sub_ref(&q.c[k]),
                    m,
                )
            })
            .collect(),
        upper_b: (1..s).map(|k| Slot::new(format!("b{}", k + 1), &q.b[k], m)).collect(),
        upper_c: (1..s).map(|k| Slot::new(format!("c{}", k + 1), &q.c[k], m)).collect(),
        lower_b: (0..s).map(|k| Slot::new(dens[2 * k].0.clone(), &dens[2 * k].1, m)).collect(),
        lower_c: (0..s)
            .map(|k| Slot::new(dens[2 * k + 1].0.clone(), &dens[2 * k + 1].1, m))
            .collect(),
        neg_m: Slot::new("-m", &one.scale(&rat_int(-(m as i64))), m),
        tail: Slot::new(dens[2 * s].0.clone(), &dens[2 * s].1, m),
        factorial: Slot::new("1", &one, m),
    };

    let pre_num = pochhammer(&one_a, m).mul_ref(&pochhammer(
        &one_a.sub_ref(&q.b[s - 1]).sub_ref(&q.c[s - 1]),
        m,
    ));
    let pre_den = tables.lower_b[s - 1].at(m).mul_ref(tables.lower_c[s - 1].at(m));

    let mut total = one.zero_like();
    nested_sum(&tables, s, m, 0, 0, pre_num, pre_den, &mut total)?;
    Ok(total.lower_order(guard))
}

/// Depth-first over `l_1, ..., l_{s-1}`; `depth` is the 0-based `k`, `cum` is
/// `L_{k}` so far. Numerator and denominator products are carried separately
/// and divided once per leaf.
#[allow(clippy::too_many_arguments)]
fn nested_sum<S: Scalar>(
    t: &RhsTables<S>,
    s: usize,
    m: usize,
    depth: usize,
    cum: usize,
    num: S,
    den: S,
    total: &mut S,
) -> Result<()> {
    if depth == s - 1 {
        let num = num.mul_ref(t.neg_m.at(cum));
        if num.vanishes() {
            return Ok(());
        }
        let den = den.mul_ref(t.tail.at(cum));
        let mut slots: Vec<&Slot<S>> = vec_refs(&t.lower_b, &t.lower_c);
        slots.push(&t.tail);
        let term = num.try_div(&den).map_err(|e| pole_at(&slots, cum, e))?;
        *total = total.add_ref(&term);
        return Ok(());
    }
    for l in 0..=(m - cum) {
        let big = cum + l;
        let n2 = num
            .mul_ref(t.balance[depth].at(l))
            .mul_ref(t.upper_b[depth].at(big))
            .mul_ref(t.upper_c[depth].at(big));
        if n2.vanishes() {
            continue;
        }
        let d2 = den
            .mul_ref(t.factorial.at(l))
            .mul_ref(t.lower_b[depth].at(big))
            .mul_ref(t.lower_c[depth].at(big));
        nested_sum(t, s, m, depth + 1, big, n2, d2, total)?;
    }
    Ok(())
}

fn vec_refs<'a, S>(a: &'a [Slot<S>], b: &'a [Slot<S>]) -> Vec<&'a Slot<S>> {
    a.iter().chain(b.iter()).collect()
}

/// Fails with [`Error::ParameterPole`] if any denominator factor on either
/// side vanishes identically.
pub fn check_poles<S: Scalar>(p: &AndrewsParams<S>) -> Result<()> {
    denominator_guard(&lhs_denominators(p), p.m)?;
    denominator_guard(&rhs_denominators(p), p.m)?;
    Ok(())
}

/// Exact equality of the two sides.
pub fn verify_andrews<S: Scalar>(p: &AndrewsParams<S>) -> Result<bool> {
    Ok(andrews_lhs(p)? == andrews_rhs(p)?)
}

/// Which two entries of `(b_1, c_1, b_2, c_2, b_3, c_3)` are set to `n+1-ε`
/// (the rest are `-n-ε`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairChoice {
    B1C1,
    B2C2,
    B3C3,
    C1C2,
    C2C3,
    C1C3,
}

impl PairChoice {
    pub const ALL: [PairChoice; 6] = [
        PairChoice::B1C1,
        PairChoice::B2C2,
        PairChoice::B3C3,
        PairChoice::C1C2,
        PairChoice::C2C3,
        PairChoice::C1C3,
    ];

    /// Positions in the interleaved group `b1, c1, b2, c2, b3, c3`.
    pub fn positions(self) -> (usize, usize) {
        match self {
            PairChoice::B1C1 => (0, 1),
            PairChoice::B2C2 => (2, 3),
            PairChoice::B3C3 => (4, 5),
            PairChoice::C1C2 => (1, 3),
            PairChoice::C2C3 => (3, 5),
            PairChoice::C1C3 => (1, 5),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PairChoice::B1C1 => "b1c1",
            PairChoice::B2C2 => "b2c2",
            PairChoice::B3C3 => "b3c3",
            PairChoice::C1C2 => "c1c2",
            PairChoice::C2C3 => "c2c3",
            PairChoice::C1C3 => "c1c3",
        }
    }

    /// The double sum this assignment turns the right side into.
    pub fn variant(self) -> SumVariant {
        match self {
            PairChoice::B1C1 => SumVariant::V1,
            PairChoice::B2C2 => SumVariant::V2,
            PairChoice::B3C3 => SumVariant::V3,
            PairChoice::C1C2 => SumVariant::V4,
            PairChoice::C2C3 => SumVariant::V5,
            PairChoice::C1C3 => SumVariant::F,
        }
    }
}

impl fmt::Display for PairChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PairChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PairChoice::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameters(format!("unknown pair choice {s:?}")))
    }
}

/// `s = 3`, `a = -n-2ε`, `m = n`, the chosen pair `n+1-ε`, the other four
/// `-n-ε`.
pub fn build_specialization(n: usize, choice: PairChoice, order: usize) -> Result<AndrewsParams<Jet>> {
    let ni = n as i64;
    let a = Jet::linear(rat_int(-ni), rat_int(-2), order)?;
    let low = Jet::linear(rat_int(-ni), rat_int(-1), order)?;
    let high = Jet::linear(rat_int(ni + 1), rat_int(-1), order)?;
    let (x, y) = choice.positions();
    let group = (0..6)
        .map(|k| if k == x || k == y { high.clone() } else { low.clone() })
        .collect();
    AndrewsParams::from_group(a, group, n)
}

/// `lim_{ε->0} (1/ε) (n/2 + ε) R(ε)` for the right side `R` of the
/// specialized transformation; equals `(-1)^n u_n / C(2n,n)^2`.
pub fn specialization_limit(n: usize, choice: PairChoice, order: usize) -> Result<Rational> {
    let p = build_specialization(n, choice, order)?;
    let rhs = andrews_rhs(&p)?;
    let shift = Jet::linear(rat(n as i64, 2), rat_int(1), order)?;
    (&shift * &rhs).limit_after_epsilon_division()
}

/// Both sides agree as jets, and the `ε -> 0` limit of the right side gives
/// back `u_n` as computed by the matching double sum.
pub fn verify_specialization(n: usize, choice: PairChoice, order: usize) -> Result<bool> {
    let p = build_specialization(n, choice, order)?;
    if !verify_andrews(&p)? {
        return Ok(false);
    }
    let limit = specialization_limit(n, choice, order)?;
    Ok(u_from_epsilon_limit(n, &limit) == u_double_sum(n, choice.variant()))
}

/// Right side of the `ε`-identity for the `(c_1, c_3)` assignment after moving
/// `1/ε` across:
///
/// ```text
/// (-n-2ε)_n (-n)_n / ((1-ε)_n (-2n-ε)_n)
///   Σ_i (-n)_i (-n-ε)_i^2 / (i! (1-ε)_i (-2n-ε)_i)
///   Σ_j (1+n)_{j-i} (-n-ε)_j (1+n-ε)_j (-n)_j / ((j-i)! (1-ε)_j^2 j!)
/// ```
///
/// It equals `(1/ε) Σ_l A_l(ε)`. With `(1-n-2ε)_n` in place of
/// `(-n-2ε)_n` it would instead vanish at `ε = 0`.
pub fn reduced_double_sum(n: usize, order: usize) -> Result<Jet> {
    reduced_double_sum_with(n, order, false)
}

/// [`reduced_double_sum`] with the leading `(1-n-2ε)_n` factor kept
/// unchanged, for comparison.
pub fn reduced_double_sum_uncorrected(n: usize, order: usize) -> Result<Jet> {
    reduced_double_sum_with(n, order, true)
}

fn reduced_double_sum_with(n: usize, order: usize, uncorrected: bool) -> Result<Jet> {
    let ni = n as i64;
    let eps = Jet::epsilon(order)?;
    let one = eps.one_like();
    let neg_n = one.scale(&rat_int(-ni));
    let lead_base = if uncorrected {
        (&eps * &one.scale(&rat_int(-2))).add_integer(1 - ni)
    } else {
        (&eps * &one.scale(&rat_int(-2))).add_integer(-ni)
    };
    let low = (-&eps).add_integer(-ni);
    let high = (-&eps).add_integer(1 + ni);
    let unit = &one - &eps;
    let wide = (-&eps).add_integer(-2 * ni);
    let n_plus = one.add_integer(ni);

    let p = |x: &Jet| pochhammer_table(x, n);
    let (t_neg_n, t_low, t_high, t_unit, t_wide, t_np, t_fact) =
        (p(&neg_n), p(&low), p(&high), p(&unit), p(&wide), p(&n_plus), p(&one));

    let prefactor = pochhammer(&lead_base, n)
        .mul_ref(&t_neg_n[n])
        .checked_div(&t_unit[n].mul_ref(&t_wide[n]))?;
    let mut outer = eps.zero_like();
    for i in 0..=n {
        let oi = t_neg_n[i]
            .mul_ref(&t_low[i])
            .mul_ref(&t_low[i])
            .checked_div(&t_fact[i].mul_ref(&t_unit[i]).mul_ref(&t_wide[i]))?;
        let mut inner = eps.zero_like();
        for j in i..=n {
            let num = t_np[j - i]
                .mul_ref(&t_low[j])
                .mul_ref(&t_high[j])
                .mul_ref(&t_neg_n[j]);
            let den = t_fact[j - i]
                .mul_ref(&t_unit[j])
                .mul_ref(&t_unit[j])
                .mul_ref(&t_fact[j]);
            inner = inner.add_ref(&num.checked_div(&den)?);
        }
        outer = outer.add_ref(&oi.mul_ref(&inner));
    }
    Ok(prefactor.mul_ref(&outer))
}

/// Checks `(1-n-2ε)_n (-n/2-ε) = -ε (-n-2ε)_n` as polynomials in `ε`.
pub fn pochhammer_shift_identity(n: usize) -> Result<bool> {
    let order = n + 2;
    let ni = n as i64;
    let eps = Jet::epsilon(order)?;
    let minus_two_eps = eps.scale(&rat_int(-2));
    let lhs = pochhammer(&minus_two_eps.add_integer(1 - ni), n)
        .mul_ref(&(-&eps).add_rational(&rat(-ni, 2)));
    let rhs = (-&eps).mul_ref(&pochhammer(&minus_two_eps.add_integer(-ni), n));
    Ok(lhs == rhs)
}

/// Sum of the jets `A_0(ε) .. A_n(ε)` (not divided by `ε`).
pub fn epsilon_family_sum(n: usize, order: usize) -> Result<Jet> {
    let mut total = Jet::constant(Rational::zero(), order)?;
    for t in crate::sums::epsilon_terms(n, order)? {
        total = &total + &t.value;
    }
    Ok(total)
}
