use thiserror::Error;

/// Errors surfaced by the solver library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no positions given")]
    EmptyInput,

    #[error("index {index} is out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("position {position} is not an integer")]
    NonIntegerInput { position: String },

    #[error("integer scan over [{lo}, {hi}] has {candidates} candidates, above the cap of {cap}")]
    RangeTooLarge {
        lo: String,
        hi: String,
        candidates: String,
        cap: u64,
    },

    #[error("malformed numeric literal {literal:?}")]
    InvalidLiteral { literal: String },
}
