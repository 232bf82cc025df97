//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("division by zero in the coefficient field")]
    DivisionByZero,

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("arity mismatch: {0} variables vs {1}")]
    ArityMismatch(usize, usize),

    #[error("rank mismatch: expected vectors of length {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("rings differ: {0}")]
    RingMismatch(String),

    #[error("colon by zero is undefined")]
    ColonByZero,

    #[error("too many variables: {0} (dense exponent vectors are capped at {1})")]
    TooManyVariables(usize, usize),

    #[error("map is not well defined: relation {index} maps to a nonzero element")]
    NotWellDefined { index: usize },

    #[error("map is not injective: kernel contains {witness}")]
    NotInjective { witness: String },

    #[error("map is not surjective")]
    NotSurjective,

    #[error("{closure} only certifies membership; it cannot materialize a closure")]
    MembershipOnly { closure: String },

    #[error("{closure} is a semi-decision procedure; it supports neither materialization nor exact membership")]
    SemiDecision { closure: String },

    #[error("query of degree {degree} exceeds the certified degree bound {bound}")]
    DegreeBoundExceeded { degree: u32, bound: u32 },

    #[error("generators cannot be reduced to a minimal set: {0}")]
    NotMinimizable(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

impl Error {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }
}
