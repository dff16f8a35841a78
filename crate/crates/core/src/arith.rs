//! Exact scalars and the combinatorial primitives built on them.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

/// `(-1)^n` as `±1`.
pub fn sign_power(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A commutative ring of exact scalars that the hypergeometric evaluators can
/// run over: plain rationals, or jets in `ε`.
///
/// Elements carry their own "shape" (a jet's truncation order), so constants
/// are built from an existing element with the `*_like` constructors.
pub trait Scalar: Clone + PartialEq + Debug {
    fn one_like(&self) -> Self;
    #[allow(clippy::wrong_self_convention)]
    fn from_rational_like(&self, r: Rational) -> Self;

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn try_div(&self, other: &Self) -> Result<Self>;

    /// Order of vanishing at `ε = 0`; `None` when identically zero.
    fn valuation(&self) -> Option<usize>;

    /// Pads with `extra` orders of exact zeros.
    fn raise_order(&self, extra: usize) -> Self;
    /// Drops the top `extra` orders.
    fn lower_order(&self, extra: usize) -> Self;

    fn zero_like(&self) -> Self {
        self.from_rational_like(Rational::zero())
    }

    fn vanishes(&self) -> bool {
        self.valuation().is_none()
    }

    fn add_rational(&self, r: &Rational) -> Self {
        self.add_ref(&self.from_rational_like(r.clone()))
    }

    fn add_integer(&self, k: i64) -> Self {
        self.add_rational(&rat_int(k))
    }

    fn scale(&self, r: &Rational) -> Self {
        self.mul_ref(&self.from_rational_like(r.clone()))
    }
}

impl Scalar for Rational {
    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn from_rational_like(&self, r: Rational) -> Self {
        r
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn try_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / other)
    }

    fn valuation(&self) -> Option<usize> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(0)
        }
    }

    fn raise_order(&self, _extra: usize) -> Self {
        self.clone()
    }

    fn lower_order(&self, _extra: usize) -> Self {
        self.clone()
    }
}

/// `C(p, q)` with zero extension: 0 whenever `q < 0` or `q > p`.
pub fn binomial(p: i64, q: i64) -> Integer {
    if q < 0 || q > p {
        return Integer::zero();
    }
    let k = q.min(p - q);
    let mut acc = Integer::one();
    for i in 0..k {
        acc *= p - i;
        acc /= i + 1;
    }
    acc
}

/// Pascal's triangle up to a fixed row, with the same zero extension as
/// [`binomial`].
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<Integer>>,
    zero: Integer,
}

impl BinomialTable {
    pub fn new(max_row: usize) -> Self {
        let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(max_row + 1);
        rows.push(vec![Integer::one()]);
        for p in 1..=max_row {
            let prev = &rows[p - 1];
            let mut row = Vec::with_capacity(p + 1);
            row.push(Integer::one());
            for q in 1..p {
                row.push(&prev[q - 1] + &prev[q]);
            }
            row.push(Integer::one());
            rows.push(row);
        }
        BinomialTable {
            rows,
            zero: Integer::zero(),
        }
    }

    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    /// # Panics
    /// If `0 <= q <= p` but `p` exceeds the table.
    pub fn get(&self, p: i64, q: i64) -> &Integer {
        if q < 0 || q > p {
            return &self.zero;
        }
        let row = self
            .rows
            .get(p as usize)
            .unwrap_or_else(|| panic!("binomial table row {p} beyond {}", self.max_row()));
        &row[q as usize]
    }
}

/// `H_l = 1 + 1/2 + ... + 1/l`, with `H_0 = 0`.
pub fn harmonic(l: usize) -> Rational {
    harmonic_table(l).pop().unwrap()
}

/// `[H_0, H_1, ..., H_max]`.
pub fn harmonic_table(max: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max + 1);
    let mut acc = Rational::zero();
    out.push(acc.clone());
    for j in 1..=max {
        acc += rat(1, j as i64);
        out.push(acc.clone());
    }
    out
}

/// Rising factorial `(x)_l = x (x+1) ... (x+l-1)`, `(x)_0 = 1`.
pub fn pochhammer<S: Scalar>(x: &S, l: usize) -> S {
    let mut acc = x.one_like();
    for k in 0..l {
        acc = acc.mul_ref(&x.add_integer(k as i64));
    }
    acc
}

/// `[(x)_0, (x)_1, ..., (x)_max]`.
pub fn pochhammer_table<S: Scalar>(x: &S, max: usize) -> Vec<S> {
    let mut out = Vec::with_capacity(max + 1);
    let mut acc = x.one_like();
    out.push(acc.clone());
    for k in 0..max {
        acc = acc.mul_ref(&x.add_integer(k as i64));
        out.push(acc.clone());
    }
    out
}

/// Bernoulli number `B_k` (`B_1 = -1/2`).
pub fn bernoulli(k: usize) -> Rational {
    bernoulli_numbers(k).pop().unwrap()
}

/// `[B_0, ..., B_max]` from `sum_{j=0}^{k} C(k+1, j) B_j = 0`.
///
/// Odd indices above 1 are zero and are filled in without evaluating the
/// recurrence.
pub fn bernoulli_numbers(max: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(max + 1);
    out.push(Rational::one());
    // Pascal row k+1, advanced in place.
    let mut row: Vec<Integer> = vec![Integer::one(), Integer::one()];
    for k in 1..=max {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(Integer::one());
        for q in 1..row.len() {
            next.push(&row[q - 1] + &row[q]);
        }
        next.push(Integer::one());
        row = next;
        if k > 1 && k % 2 == 1 {
            out.push(Rational::zero());
            continue;
        }
        let mut acc = Rational::zero();
        for (j, b) in out.iter().enumerate() {
            if !Zero::is_zero(b) {
                acc += b * Rational::from_integer(row[j].clone());
            }
        }
        out.push(-acc / rat_int(k as i64 + 1));
    }
    out
}
