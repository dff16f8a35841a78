//! Exact arithmetic toolkit for the Apéry-like rational approximations
//! `v_n / u_n -> ζ(4)`.
//!
//! The crate is `no_std` (it needs `alloc`) and contains no IO. It provides:
//!
//! - [`arith`]: big integers/rationals, binomials, Pochhammer symbols,
//!   harmonic and Bernoulli numbers, and the [`arith::Scalar`] ring trait.
//! - [`jet`]: truncated power series in a formal `ε` used to take `ε -> 0`
//!   limits exactly.
//! - [`sequences`]: the three-term recurrence producing `u_n`, `v_n`.
//! - [`sums`]: the harmonic-number sum, the `ε`-family `A_l(ε)` and the six
//!   double-sum representations of `u_n`.
//! - [`andrews`]: both sides of Andrews's multiple very-well-poised
//!   transformation (`q = 1`), for any `s`, over rationals or jets.
//! - [`diagnostics`]: rational interval enclosures of `ζ(4)` and of the
//!   residuals `u_n ζ(4) - v_n`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod andrews;
pub mod arith;
pub mod diagnostics;
pub mod error;
pub mod jet;
pub mod sequences;
pub mod sums;

pub use arith::{Integer, Rational, Scalar};
pub use error::Error;
pub use jet::Jet;

pub type Result<T, E = Error> = core::result::Result<T, E>;
