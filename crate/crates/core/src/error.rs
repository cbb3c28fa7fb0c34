use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected n = {expected}, got n = {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension n = {n} exceeds the limit of {limit} for {what}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("mask {mask:#b} does not fit in n = {n} bits")]
    MaskOutOfRange { mask: u32, n: usize },

    #[error("signature entry q{index} is zero")]
    ZeroSignature { index: usize },

    #[error("cochain is not normalized/nowhere-zero at ({x:#b}, {y:#b})")]
    InvalidCochain { x: u32, y: u32 },

    #[error("grading function is invalid: {0}")]
    InvalidGrading(String),

    #[error("operands belong to different algebras")]
    AlgebraMismatch,

    #[error("algebra was not produced by the doubling process")]
    NotProcessed,

    #[error("the closed associator form needs a +-1 valued grading; {0}")]
    GeneralGrading(String),

    #[error("grading is not an involutive character: {0}")]
    NotInvolutiveCharacter(String),

    #[error("representation check failed: {0}")]
    BadRepresentation(String),

    #[error("odd tensor factor dimension {0}; the twist needs an even factor")]
    OddFactor(usize),

    #[error("parameter q = {0} is not +-1")]
    NotUnitSign(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
