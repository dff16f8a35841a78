//! Truncated power series in a formal variable `ε`.
//!
//! A [`Jet`] of order `K` stores the coefficients of `ε^0 .. ε^(K-1)`; every
//! product is truncated at `ε^K`. Jets of different orders never mix: the
//! checked operations report [`Error::OrderMismatch`] and the operator impls
//! panic on it.
//!
//! Division accepts divisors with zero constant term as long as the dividend
//! vanishes at least as fast. Both sides are shifted down by the divisor's
//! valuation `v`, with exact zeros shifted in at the top, so only the first
//! `K - v` coefficients of such a quotient are determined by the inputs.
//! Callers that need all `K` coefficients work at order `K + v` and truncate
//! (see [`Jet::raise_order`]).

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{rat_int, Rational, Scalar};
use crate::{Error, Result};

/// Smallest order accepted by [`Jet::new`] and friends.
pub const MIN_ORDER: usize = 2;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Jet {
    coeffs: Vec<Rational>,
}

impl Jet {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        check_order(coeffs.len())?;
        Ok(Jet { coeffs })
    }

    /// Embeds `r` as `(r, 0, ..., 0)`.
    pub fn constant(r: Rational, order: usize) -> Result<Self> {
        check_order(order)?;
        Ok(Self::constant_unchecked(r, order))
    }

    /// `c0 + c1 ε`.
    pub fn linear(c0: Rational, c1: Rational, order: usize) -> Result<Self> {
        let mut j = Self::constant(c0, order)?;
        j.coeffs[1] = c1;
        Ok(j)
    }

    /// The variable `ε` itself.
    pub fn epsilon(order: usize) -> Result<Self> {
        Self::linear(Rational::zero(), Rational::one(), order)
    }

    fn constant_unchecked(r: Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        coeffs.push(r);
        coeffs.resize(order, Rational::zero());
        Jet { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `ε^k` (zero beyond the order).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops everything from `ε^order` upward.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        check_order(order)?;
        if order > self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: order,
            });
        }
        Ok(Jet {
            coeffs: self.coeffs[..order].to_vec(),
        })
    }

    /// Same polynomial at order `K + extra`, padded with exact zeros.
    pub fn raise_order(&self, extra: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(self.order() + extra, Rational::zero());
        Jet { coeffs }
    }

    fn same_order(&self, other: &Jet) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Jet) -> Result<Jet> {
        self.same_order(other)?;
        Ok(Jet {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Jet) -> Result<Jet> {
        self.same_order(other)?;
        Ok(Jet {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Jet) -> Result<Jet> {
        self.same_order(other)?;
        let k = self.order();
        let mut coeffs: Vec<Rational> = (0..k).map(|_| Rational::zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..k - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(Jet { coeffs })
    }

    pub fn checked_div(&self, other: &Jet) -> Result<Jet> {
        self.same_order(other)?;
        let v = other.valuation().ok_or(Error::DivisionByZero)?;
        let k = self.order();
        if let Some(vx) = self.valuation() {
            if vx < v {
                return Err(Error::Pole {
                    dividend: vx,
                    divisor: v,
                });
            }
        } else {
            return Ok(Jet::constant_unchecked(Rational::zero(), k));
        }
        let num = shift_down(&self.coeffs, v);
        let den = shift_down(&other.coeffs, v);
        let lead = den[0].clone();
        let mut out: Vec<Rational> = Vec::with_capacity(k);
        for i in 0..k {
            let mut acc = num[i].clone();
            for j in 1..=i {
                if !den[j].is_zero() {
                    acc -= &den[j] * &out[i - j];
                }
            }
            out.push(acc / &lead);
        }
        Ok(Jet { coeffs: out })
    }

    /// `lim_{ε->0} x / ε`: the `ε^1` coefficient, provided the constant term
    /// vanishes.
    pub fn limit_after_epsilon_division(&self) -> Result<Rational> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::DivergentLimit {
                constant: self.coeffs[0].to_string(),
            });
        }
        Ok(self.coeffs[1].clone())
    }
}

fn shift_down(coeffs: &[Rational], v: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = coeffs[v..].to_vec();
    out.resize(coeffs.len(), Rational::zero());
    out
}

fn check_order(order: usize) -> Result<()> {
    if order < MIN_ORDER {
        return Err(Error::InvalidOrder {
            order,
            min: MIN_ORDER,
        });
    }
    Ok(())
}

impl fmt::Debug for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Jet({self})")
    }
}

impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})ε")?,
                _ => write!(f, "({c})ε^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(ε^{})", self.order())
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Jet> for &'a Jet {
            type Output = Jet;
            fn $method(self, rhs: &'a Jet) -> Jet {
                self.$checked(rhs).expect("jet order mismatch")
            }
        }

        impl $tr for Jet {
            type Output = Jet;
            fn $method(self, rhs: Jet) -> Jet {
                (&self).$checked(&rhs).expect("jet order mismatch")
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        -&self
    }
}

impl Scalar for Jet {
    fn one_like(&self) -> Self {
        Jet::constant_unchecked(Rational::one(), self.order())
    }

    fn from_rational_like(&self, r: Rational) -> Self {
        Jet::constant_unchecked(r, self.order())
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
        self.checked_div(other)
    }

    fn valuation(&self) -> Option<usize> {
        Jet::valuation(self)
    }

    fn raise_order(&self, extra: usize) -> Self {
        Jet::raise_order(self, extra)
    }

    fn lower_order(&self, extra: usize) -> Self {
        Jet {
            coeffs: self.coeffs[..self.order() - extra].to_vec(),
        }
    }

    fn add_integer(&self, k: i64) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += rat_int(k);
        out
    }

    fn scale(&self, r: &Rational) -> Self {
        Jet {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }
}
