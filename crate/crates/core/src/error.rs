use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// The lowest-terms denominator evaluates to zero at the requested point.
    #[error("denominator vanishes under specialization: {0}")]
    DenominatorVanishes(String),

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    /// Factorial-cost operation requested beyond the configured rank cap.
    #[error("rank {n} exceeds the cap {cap} (symmetrization costs O(n!*n) generator applications)")]
    CapExceeded { n: usize, cap: usize },

    #[error("rho*(T_x) is not diagonal on chi_{y}: {detail}")]
    NotDiagonal { y: String, detail: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_rank(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::RankMismatch { left, right })
    }
}
