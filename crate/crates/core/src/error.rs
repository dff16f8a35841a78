use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("jet order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("jet order must be at least {min}, got {order}")]
    InvalidOrder { order: usize, min: usize },

    #[error("division by zero")]
    DivisionByZero,

    /// The divisor vanishes to higher order in `ε` than the dividend.
    #[error("pole: divisor valuation {divisor} exceeds dividend valuation {dividend}")]
    Pole { dividend: usize, divisor: usize },

    /// `lim (1/ε) x` requested for a jet with nonzero constant term.
    #[error("limit diverges: constant coefficient is {constant}")]
    DivergentLimit { constant: String },

    /// A denominator Pochhammer symbol of a hypergeometric term vanishes.
    #[error("pole in denominator parameter {parameter} at index {index}")]
    ParameterPole { parameter: String, index: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("enclosure too loose at n = {n}: residual width exceeds its magnitude")]
    EnclosureTooLoose { n: usize },

    #[error("invalid interval: lower bound exceeds upper bound")]
    InvalidInterval,

    #[error("row {n} missing")]
    MissingRow { n: usize },
}

impl Error {
    /// True for errors that signal a singular input rather than a failed check.
    pub fn is_pole(&self) -> bool {
        matches!(
            self,
            Error::Pole { .. } | Error::ParameterPole { .. } | Error::DivisionByZero
        )
    }
}
