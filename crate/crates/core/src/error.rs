use thiserror::Error;

/// Errors raised while parsing, rewriting, deriving and verifying words.
///
/// Positions are 1-based, matching the way words are usually written down.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    Empty,

    #[error("unknown character {found:?} at position {position}")]
    UnknownLetter { position: usize, found: char },

    #[error("move letter expected at position {position}")]
    MoveExpected { position: usize },

    #[error("turn letter expected at position {position}")]
    TurnExpected { position: usize },

    #[error("adjacent move letters equal at position {position}")]
    RepeatedMove { position: usize },

    #[error("word ends with a turn letter (even length {length})")]
    EvenLength { length: usize },

    #[error("letters must either all carry a parity or none may (position {position})")]
    MixedParity { position: usize },

    #[error("letter {found:?} at position {position} is not allowed here")]
    UnexpectedLetter { position: usize, found: char },

    #[error("word has no parities; a finished word is required")]
    NotFinished,

    #[error("parity alternation broken at position {position}")]
    ParityBreak { position: usize },

    #[error("reverse at start of word")]
    ReverseAtStart,

    #[error("reverse at end of word (position {position})")]
    ReverseAtEnd { position: usize },

    #[error("adjacent reverse letters at position {position}")]
    AdjacentReverse { position: usize },

    #[error("turn letter at even position {position}; thinning expects a straight placeholder")]
    ThinningFault { position: usize },

    #[error("input not a valid folding curve: {production} production: {source}")]
    InvalidFoldingCurve {
        production: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("expansion needs {required} letters, cap is {cap}")]
    CapExceeded { required: u128, cap: usize },

    #[error("folding path reuses a lattice cell at edge {edge}")]
    DuplicateCell { edge: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
