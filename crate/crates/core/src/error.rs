use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("{0}: constant term must be zero")]
    NonZeroConstant(&'static str),

    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: String },

    #[error("Janowski parameters must satisfy -1 < B < A <= 1 (got A={a}, B={b})")]
    ParameterOrder { a: String, b: String },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid rational literal {0:?}")]
    BadRational(String),

    #[error("point ({p}, {x}) is not a corner of box {rect}")]
    NotACorner { p: String, x: String, rect: String },

    #[error("polynomial does not vanish to second order at the corner: {0}")]
    NotACornerZero(String),

    #[error("polynomial has a term p^{i} x^{j} outside bidegree ({m}, {n})")]
    DegreeOverflow {
        i: usize,
        j: usize,
        m: usize,
        n: usize,
    },

    #[error("bisection bracket not found for gamma={0}")]
    BracketNotFound(String),

    #[error("transcription mismatch in {what}: {detail}")]
    Transcription { what: &'static str, detail: String },

    #[error("certificate rejected: {0}")]
    Certificate(String),

    #[error("unknown check {0:?}")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
