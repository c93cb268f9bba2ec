use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A function was evaluated at one of its poles.
    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: String },

    #[error("domain error in {function}: {reason}")]
    Domain { function: &'static str, reason: String },

    /// A recurrence coefficient vanished or had a vanishing denominator.
    #[error("coefficient pole at n = {n} in {which}")]
    CoefficientPole { n: i64, which: String },

    #[error("did not converge: {0}")]
    NonConvergence(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Two routes that must agree exactly did not.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}
