use thiserror::Error;

use crate::poly::Polynomial;
use crate::word::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown token {0:?}")]
    Token(String),
    #[error("empty word (spell it `eps`)")]
    EmptyWord,
    #[error("bad coefficient {0:?}")]
    Coefficient(String),
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("{0}")]
    Other(String),
}

impl ParseError {
    pub(crate) fn line(line: usize, msg: impl Into<String>) -> Self {
        ParseError::Line {
            line,
            msg: msg.into(),
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("letter {0} is outside the alphabet")]
    InvalidAlphabet(Letter),
    #[error("rewrite budget of {budget} steps exhausted ({remaining_redexes} redexes left)")]
    BudgetExhausted {
        budget: usize,
        partial: Box<Polynomial>,
        remaining_redexes: usize,
    },
    #[error("invalid machine: {0}")]
    InvalidMachine(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
