use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: expected {}", .expected.join(", "))]
    Syntax { offset: usize, expected: Vec<String> },

    #[error("unknown operator `{name}` at byte {offset}")]
    UnknownOperator { name: String, offset: usize },

    #[error("input is {len} bytes, the limit is {limit}")]
    InputTooLarge { len: usize, limit: usize },

    #[error("expression nesting exceeds depth {limit} at byte {offset}")]
    NestingTooDeep { offset: usize, limit: usize },

    #[error("cannot divide by a non-scalar operator")]
    DivisionByOperator,

    #[error("cannot divide by {0}")]
    NotInvertible(String),

    #[error(transparent)]
    Engine(#[from] landau_core::Error),
}
