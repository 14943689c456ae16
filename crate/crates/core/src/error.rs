use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator vanishes at x = 0")]
    PoleAtZero,
    #[error("input is identically zero")]
    ZeroInput,
    #[error("constant term is not invertible")]
    NonUnitConstantTerm,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("no quadratic relation within the given degree bounds")]
    NoRelationFound,
    #[error("fixed-point iteration does not gain precision")]
    DivergentIteration,
    #[error("relation is not canonicalizable: {0}")]
    NotCanonicalizable(&'static str),
    #[error("transformation failed at step {step}: {source}")]
    ChainStep { step: usize, source: Box<Error> },
    #[error("chain too short: {steps} steps resolve Hankel indices only up to {n}")]
    ChainTooShort { n: usize, steps: usize },
    #[error("no period found within {0} steps")]
    NoPeriodFound(usize),
    #[error("verification failed at n = {0}")]
    VerificationFailed(i64),
    #[error("linear system has no nontrivial solution")]
    NoFit,
    #[error("{id} does not hold at n = {n}")]
    Mismatch { id: String, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
