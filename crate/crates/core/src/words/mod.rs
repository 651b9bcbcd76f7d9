//! Folding and boundary alphabets, their words, and n-fold expansion.

mod dir;
mod expand;
mod fold;

pub use dir::{BoundarySystem, DirLetter, DirWord, Direction, Parity, PRODUCTION_KEYS};
pub use expand::{expand_boundary, expand_fold, fold_expansion_len, ExpansionCap};
pub use fold::{parse_fold_word, FoldLetter, FoldWord, FoldingSystem};
