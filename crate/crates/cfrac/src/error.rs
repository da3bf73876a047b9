use thiserror::Error;

/// Library-wide error type. Every fallible operation returns one of these;
/// nothing in the computational core panics on user input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("depth {requested} exceeds the {available} stored terms (terminated: {terminated})")]
    DepthExceedsTerms {
        requested: usize,
        available: usize,
        terminated: bool,
    },

    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,

    #[error("series truncation order {order} is too small to certify index {index}")]
    TruncationTooSmall { order: usize, index: usize },

    #[error("continued fraction is not in pure (g,h) term form")]
    NotPureGhForm,

    #[error("degenerate linear fractional map: ad - bc = 0")]
    DegenerateMap,

    #[error("linear fractional map has undefined head value: c + d = 0")]
    HeadUndefined,

    #[error("residual at step {step} vanishes to order {order} >= 2; no linear-numerator expansion exists")]
    ResidualOrderTooHigh { step: usize, order: usize },

    #[error("series order {order} is insufficient for {depth} expansion steps (need at least {needed})")]
    InsufficientOrder {
        order: usize,
        depth: usize,
        needed: usize,
    },

    #[error("zero denominator at level {level} during reconstruction")]
    ZeroDenominatorLevel { level: usize },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("decimal reference for exponent {s} is not certifiable within the iteration budget")]
    ReferenceNotCertifiable { s: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
