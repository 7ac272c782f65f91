use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pole at t=0")]
    PoleAtZero,
    #[error("pole at evaluation point")]
    PoleAtEvaluation,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("reconstruction inconsistent")]
    ReconstructionInconsistent,
    #[error("series order {order} too small, need at least {needed}")]
    InsufficientOrder { order: usize, needed: usize },
    #[error("not dominant: {0:?}")]
    NotDominant(Vec<i64>),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("repeated Satake values, bialternant undefined")]
    RepeatedValues,
    #[error("additive character of conductor {0} trivial on F over a ramified extension violates the even-conductor rule")]
    OddConductor(i64),
    #[error("additive character is not trivial on F")]
    NotTrivialOnF,
    #[error("invalid field pair: {0}")]
    InvalidField(String),
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("not generic: segments {0} and {1} are linked")]
    NotGeneric(usize, usize),
    #[error("representation must have at least one segment")]
    Empty,
    #[error("unramified representation, use spherical_value")]
    UnramifiedRep,
    #[error("non-holomorphic at s=1")]
    NotHolomorphic,
    #[error("not distinguished-compatible: {0}")]
    NotDistinguishedCompatible(String),
    #[error("rank mismatch: {0}")]
    RankMismatch(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
