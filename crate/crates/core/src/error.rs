use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{n} and {a} are not coprime")]
    NotCoprime { n: i64, a: i64 },
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("integer overflow in continuant arithmetic")]
    Overflow,
    #[error("entry {index} is {value}, expected a (-1)-curve (entry 1)")]
    NotMinusOne { index: usize, value: i64 },
    #[error("index {index} out of range for chain of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("blow-down would produce a negative weight at entry {index}")]
    NegativeWeight { index: usize },
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not of class W: {0}")]
    NotClassW(String),
    #[error("flip formula requires the underline on the last entry (got {underline} of {len})")]
    UnderlineNotLast { underline: usize, len: usize },
    #[error("chain has no entry >= 3")]
    AllTwos,
    #[error("configuration has no (-1)-curve")]
    NoMinusOne,
    #[error("configuration has {0} entries equal to 1")]
    MultipleMinusOnes(usize),
    #[error("malformed configuration: {0}")]
    MalformedConfiguration(String),
    #[error("flip formula disagrees with blow-down oracle: {0}")]
    DisagreementWithFormula(String),
    #[error("move did not increase p: {0}")]
    MoveDidNotIncreaseP(String),
}

impl Error {
    /// Process exit status for the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Overflow => 3,
            Error::DisagreementWithFormula(_) | Error::MoveDidNotIncreaseP(_) => 1,
            _ => 2,
        }
    }
}
