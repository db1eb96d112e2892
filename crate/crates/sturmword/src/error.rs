//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by word generation, numeration, and period queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The directive-sequence text or term list violates the grammar or the
    /// positivity requirement.
    #[error("invalid directive sequence: {0}")]
    InvalidDirective(String),

    /// A term beyond the finite head of a cycle-free sequence was requested.
    #[error("directive sequence exhausted: term {index} is not available")]
    Exhausted { index: usize },

    /// A binary-word string contained a character other than '0' or '1'.
    #[error("invalid binary word: {0}")]
    InvalidWord(String),

    /// A digit vector violates the Ostrowski validity conditions.
    #[error("invalid Ostrowski digits: {0}")]
    InvalidDigits(String),

    /// The operation is undefined for the representation of zero.
    #[error("operation undefined for the zero representation")]
    ZeroRepresentation,

    /// A block length exceeded the range of u64.
    #[error("block length overflows u64 at index {index}")]
    Overflow { index: usize },

    /// The empty word is never a repetition word.
    #[error("empty candidate is not a repetition word")]
    EmptyCandidate,

    /// The brute-force search exhausted its length bound.
    #[error("no repetition word of length <= {max_len} found at position {position}")]
    NoRepetitionWord { position: u64, max_len: u64 },

    /// A word handed to the lifting construction fails the repetition-word
    /// check at the stated position.
    #[error("\"{word}\" is not a repetition word at position {position}")]
    NotRepetitionWord { word: String, position: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
