use thiserror::Error;

use crate::polynomial::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("binomial coefficient undefined for negative n = {0}")]
    NegativeBinomialTop(String),
    #[error("variable mismatch: {left} vs {right}")]
    VarMismatch { left: Var, right: Var },
    #[error("{op} requires {expected}, got {got}")]
    WrongVar {
        op: &'static str,
        expected: Var,
        got: Var,
    },
    #[error("{op}: argument {arg} = {value} out of range (need {arg} >= {min})")]
    OutOfRange {
        op: &'static str,
        arg: &'static str,
        value: u64,
        min: u64,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Rejects `value < min` with [`Error::OutOfRange`].
pub(crate) fn require_at_least(
    op: &'static str,
    arg: &'static str,
    value: usize,
    min: usize,
) -> Result<()> {
    if value < min {
        Err(Error::OutOfRange {
            op,
            arg,
            value: value as u64,
            min: min as u64,
        })
    } else {
        Ok(())
    }
}
