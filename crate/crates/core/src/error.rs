use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("capacity exceeded: level {level} would hold more than {capacity} permutations")]
    Capacity { level: usize, capacity: usize },
    #[error("division by a series with zero constant term")]
    ZeroConstantTerm,
    #[error("no exact square root of {0}")]
    NotASquare(String),
    #[error("root is not simple: derivative vanishes at the constant term")]
    NonSimpleRoot,
    #[error("constant term {0} does not solve the equation")]
    NotARoot(String),
    #[error("coefficient {index} is not an integer: {value}")]
    NonInteger { index: usize, value: String },
    #[error("unknown case {0}")]
    UnknownCase(u32),
    #[error("unknown name {name:?} for case {case}")]
    UnknownName { case: u32, name: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("integrity check failed: {0}")]
    Integrity(String),
}
