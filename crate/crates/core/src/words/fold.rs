use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter of the folding alphabet.
///
/// `A` and `B` are unit moves starting from an even and an odd square
/// respectively; `+` turns right and `-` turns left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FoldLetter {
    MoveA,
    MoveB,
    TurnPlus,
    TurnMinus,
}

impl FoldLetter {
    pub const ALL: [FoldLetter; 4] = [
        FoldLetter::MoveA,
        FoldLetter::MoveB,
        FoldLetter::TurnPlus,
        FoldLetter::TurnMinus,
    ];

    pub fn from_char(c: char) -> Option<FoldLetter> {
        match c {
            'A' => Some(FoldLetter::MoveA),
            'B' => Some(FoldLetter::MoveB),
            '+' => Some(FoldLetter::TurnPlus),
            '-' => Some(FoldLetter::TurnMinus),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            FoldLetter::MoveA => 'A',
            FoldLetter::MoveB => 'B',
            FoldLetter::TurnPlus => '+',
            FoldLetter::TurnMinus => '-',
        }
    }

    pub fn is_move(self) -> bool {
        matches!(self, FoldLetter::MoveA | FoldLetter::MoveB)
    }

    /// The letter-wise tilde operation: `A<->B`, `+<->-`.
    pub fn complement(self) -> FoldLetter {
        match self {
            FoldLetter::MoveA => FoldLetter::MoveB,
            FoldLetter::MoveB => FoldLetter::MoveA,
            FoldLetter::TurnPlus => FoldLetter::TurnMinus,
            FoldLetter::TurnMinus => FoldLetter::TurnPlus,
        }
    }
}

impl fmt::Display for FoldLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A word `X1 s1 X2 s2 ... Xn` over `{A, B, +, -}`: moves at odd positions,
/// turns at even positions, consecutive moves alternating between `A` and `B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FoldWord {
    letters: Vec<FoldLetter>,
}

impl FoldWord {
    /// Validates `letters` against the word grammar.
    pub fn new(letters: Vec<FoldLetter>) -> Result<FoldWord> {
        validate(&letters)?;
        Ok(FoldWord { letters })
    }

    /// Skips validation. Callers must only pass words built from valid words
    /// by grammar-preserving substitutions.
    pub(crate) fn from_letters_unchecked(letters: Vec<FoldLetter>) -> FoldWord {
        debug_assert!(validate(&letters).is_ok());
        FoldWord { letters }
    }

    pub fn letters(&self) -> &[FoldLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> FoldLetter {
        self.letters[0]
    }

    pub fn last(&self) -> FoldLetter {
        self.letters[self.letters.len() - 1]
    }

    /// Number of move letters (`A` or `B`).
    pub fn move_count(&self) -> usize {
        self.letters.len().div_ceil(2)
    }

    /// Every valid word with `moves` move letters, `A`-first words before
    /// `B`-first ones.
    pub fn enumerate(moves: usize) -> impl Iterator<Item = FoldWord> {
        assert!((1..32).contains(&moves));
        [FoldLetter::MoveA, FoldLetter::MoveB]
            .into_iter()
            .flat_map(move |first| {
                (0u32..(1 << (moves - 1))).map(move |mask| {
                    let mut letters = Vec::with_capacity(2 * moves - 1);
                    letters.push(first);
                    let mut current = first;
                    for bit in 0..moves - 1 {
                        letters.push(if mask >> bit & 1 == 1 {
                            FoldLetter::TurnPlus
                        } else {
                            FoldLetter::TurnMinus
                        });
                        current = current.complement();
                        letters.push(current);
                    }
                    FoldWord { letters }
                })
            })
    }

    /// Reverses the word and complements every letter. This is how `σ(B)`
    /// is obtained from `σ(A)`.
    pub fn complement_reverse(&self) -> FoldWord {
        FoldWord {
            letters: self.letters.iter().rev().map(|l| l.complement()).collect(),
        }
    }
}

fn validate(letters: &[FoldLetter]) -> Result<()> {
    if letters.is_empty() {
        return Err(Error::Empty);
    }
    let mut previous_move = None;
    for (i, &letter) in letters.iter().enumerate() {
        let position = i + 1;
        if i % 2 == 0 {
            if !letter.is_move() {
                return Err(Error::MoveExpected { position });
            }
            if previous_move == Some(letter) {
                return Err(Error::RepeatedMove { position });
            }
            previous_move = Some(letter);
        } else if letter.is_move() {
            return Err(Error::TurnExpected { position });
        }
    }
    if letters.len().is_multiple_of(2) {
        return Err(Error::EvenLength {
            length: letters.len(),
        });
    }
    Ok(())
}

/// Parses a folding word such as `"A-B+A"`. Whitespace is not permitted.
pub fn parse_fold_word(text: &str) -> Result<FoldWord> {
    let letters = text
        .chars()
        .enumerate()
        .map(|(i, c)| {
            FoldLetter::from_char(c).ok_or(Error::UnknownLetter {
                position: i + 1,
                found: c,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    FoldWord::new(letters)
}

impl FromStr for FoldWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<FoldWord> {
        parse_fold_word(s)
    }
}

impl fmt::Display for FoldWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The input L-system: `σ(A)` together with the derived `σ(B)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldingSystem {
    prod_a: FoldWord,
    prod_b: FoldWord,
}

impl FoldingSystem {
    pub fn new(prod_a: FoldWord) -> FoldingSystem {
        let prod_b = prod_a.complement_reverse();
        FoldingSystem { prod_a, prod_b }
    }

    pub fn parse(sigma_a: &str) -> Result<FoldingSystem> {
        Ok(FoldingSystem::new(parse_fold_word(sigma_a)?))
    }

    pub fn prod_a(&self) -> &FoldWord {
        &self.prod_a
    }

    pub fn prod_b(&self) -> &FoldWord {
        &self.prod_b
    }

    /// The production for a letter; turns map to themselves.
    pub fn production(&self, letter: FoldLetter) -> &[FoldLetter] {
        match letter {
            FoldLetter::MoveA => self.prod_a.letters(),
            FoldLetter::MoveB => self.prod_b.letters(),
            FoldLetter::TurnPlus => &[FoldLetter::TurnPlus],
            FoldLetter::TurnMinus => &[FoldLetter::TurnMinus],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_heighway_rule() {
        let w = parse_fold_word("A-B").unwrap();
        assert_eq!(
            w.letters(),
            &[FoldLetter::MoveA, FoldLetter::TurnMinus, FoldLetter::MoveB]
        );
        assert_eq!(
            parse_fold_word("A").unwrap().letters(),
            &[FoldLetter::MoveA]
        );
    }

    #[test]
    fn grammar_errors_carry_positions() {
        assert_eq!(
            parse_fold_word("A+A"),
            Err(Error::RepeatedMove { position: 3 })
        );
        assert_eq!(
            parse_fold_word("AB"),
            Err(Error::TurnExpected { position: 2 })
        );
        assert_eq!(parse_fold_word("A-"), Err(Error::EvenLength { length: 2 }));
        assert_eq!(
            parse_fold_word("+A"),
            Err(Error::MoveExpected { position: 1 })
        );
        assert_eq!(
            parse_fold_word("A x"),
            Err(Error::UnknownLetter {
                position: 2,
                found: ' '
            })
        );
        assert_eq!(parse_fold_word(""), Err(Error::Empty));
        assert_eq!(
            Error::TurnExpected { position: 2 }.to_string(),
            "turn letter expected at position 2"
        );
    }

    #[test]
    fn complement_reverse_examples() {
        let w = parse_fold_word("A-B").unwrap();
        assert_eq!(w.complement_reverse().to_string(), "A+B");
        assert_eq!(
            parse_fold_word("A")
                .unwrap()
                .complement_reverse()
                .to_string(),
            "B"
        );
        let long = parse_fold_word("A-B+A-B+A+B-A+B+A").unwrap();
        assert_eq!(long.complement_reverse().complement_reverse(), long);
        // Table row 2 of the bundled examples lists σ(B) explicitly.
        assert_eq!(long.complement_reverse().to_string(), "B-A-B+A-B-A+B-A+B");
    }

    #[test]
    fn complement_reverse_is_an_involution_up_to_length_7() {
        let mut count = 0;
        for moves in 1..=4 {
            for w in FoldWord::enumerate(moves) {
                let once = w.complement_reverse();
                assert!(FoldWord::new(once.letters().to_vec()).is_ok());
                assert_eq!(once.complement_reverse(), w);
                count += 1;
            }
        }
        // 2 + 4 + 8 + 16 words of length 1, 3, 5, 7
        assert_eq!(count, 30);
    }

    #[test]
    fn system_derives_sigma_b() {
        let sys = FoldingSystem::parse("A-B").unwrap();
        assert_eq!(sys.prod_b().to_string(), "A+B");
        assert_eq!(
            sys.production(FoldLetter::TurnPlus),
            &[FoldLetter::TurnPlus]
        );
    }
}
