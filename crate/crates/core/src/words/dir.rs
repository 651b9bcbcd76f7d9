use std::fmt;

use crate::error::{Error, Result};

/// Turning instruction of a boundary letter.
///
/// `Reverse` is only used while deriving boundary words and never appears in a
/// finished [`BoundarySystem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    TurnLeft,
    TurnRight,
    Straight,
    Reverse,
}

impl Direction {
    pub fn is_turn(self) -> bool {
        matches!(self, Direction::TurnLeft | Direction::TurnRight)
    }

    /// Swaps left and right; straight and reverse are fixed.
    pub fn mirrored(self) -> Direction {
        match self {
            Direction::TurnLeft => Direction::TurnRight,
            Direction::TurnRight => Direction::TurnLeft,
            d => d,
        }
    }

    /// Rotation in eighths of a full turn, counterclockwise positive.
    pub fn rotation(self) -> i32 {
        match self {
            Direction::TurnLeft => 2,
            Direction::TurnRight => -2,
            Direction::Straight => 0,
            Direction::Reverse => 4,
        }
    }
}

/// Parity of the square a letter starts in. Even squares are written in upper
/// case, odd squares in lower case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn from_bit(bit: i64) -> Parity {
        if bit.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DirLetter {
    pub direction: Direction,
    pub parity: Option<Parity>,
}

impl DirLetter {
    pub fn raw(direction: Direction) -> DirLetter {
        DirLetter {
            direction,
            parity: None,
        }
    }

    pub fn finished(direction: Direction, parity: Parity) -> DirLetter {
        DirLetter {
            direction,
            parity: Some(parity),
        }
    }

    /// Text form. Raw letters print as `L`, `R`, `s`, `v`; finished letters
    /// print upper case when even and lower case when odd.
    pub fn to_char(self) -> char {
        match (self.direction, self.parity) {
            (Direction::TurnLeft, Some(Parity::Odd)) => 'l',
            (Direction::TurnLeft, _) => 'L',
            (Direction::TurnRight, Some(Parity::Odd)) => 'r',
            (Direction::TurnRight, _) => 'R',
            (Direction::Straight, Some(Parity::Even)) => 'S',
            (Direction::Straight, _) => 's',
            (Direction::Reverse, _) => 'v',
        }
    }
}

/// A word over the boundary alphabet.
///
/// Either every letter carries a parity (a finished word) or none does (a raw
/// word produced by the intermediate derivation steps).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DirWord {
    letters: Vec<DirLetter>,
}

impl DirWord {
    pub fn new(letters: Vec<DirLetter>) -> Result<DirWord> {
        if let Some(first) = letters.first() {
            let finished = first.parity.is_some();
            if let Some(i) = letters.iter().position(|l| l.parity.is_some() != finished) {
                return Err(Error::MixedParity { position: i + 1 });
            }
        }
        Ok(DirWord { letters })
    }

    pub fn from_directions<I: IntoIterator<Item = Direction>>(dirs: I) -> DirWord {
        DirWord {
            letters: dirs.into_iter().map(DirLetter::raw).collect(),
        }
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<DirLetter>) -> DirWord {
        DirWord { letters }
    }

    /// Parses a raw word over `L`, `R`, `s`, `v`.
    pub fn parse_raw(text: &str) -> Result<DirWord> {
        let letters = text
            .chars()
            .enumerate()
            .map(|(i, c)| {
                let direction = match c {
                    'L' => Direction::TurnLeft,
                    'R' => Direction::TurnRight,
                    's' => Direction::Straight,
                    'v' => Direction::Reverse,
                    'S' | 'l' | 'r' => {
                        return Err(Error::UnexpectedLetter {
                            position: i + 1,
                            found: c,
                        })
                    }
                    _ => {
                        return Err(Error::UnknownLetter {
                            position: i + 1,
                            found: c,
                        })
                    }
                };
                Ok(DirLetter::raw(direction))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DirWord { letters })
    }

    /// Parses a finished word over `L`, `R`, `S`, `l`, `r`, `s`.
    pub fn parse_finished(text: &str) -> Result<DirWord> {
        let letters = text
            .chars()
            .enumerate()
            .map(|(i, c)| {
                let (direction, parity) = match c {
                    'L' => (Direction::TurnLeft, Parity::Even),
                    'R' => (Direction::TurnRight, Parity::Even),
                    'S' => (Direction::Straight, Parity::Even),
                    'l' => (Direction::TurnLeft, Parity::Odd),
                    'r' => (Direction::TurnRight, Parity::Odd),
                    's' => (Direction::Straight, Parity::Odd),
                    'v' => {
                        return Err(Error::UnexpectedLetter {
                            position: i + 1,
                            found: c,
                        })
                    }
                    _ => {
                        return Err(Error::UnknownLetter {
                            position: i + 1,
                            found: c,
                        })
                    }
                };
                Ok(DirLetter::finished(direction, parity))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DirWord { letters })
    }

    pub fn letters(&self) -> &[DirLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_finished(&self) -> bool {
        self.letters.first().is_some_and(|l| l.parity.is_some())
    }

    pub fn directions(
        &self,
    ) -> impl DoubleEndedIterator<Item = Direction> + ExactSizeIterator + '_ {
        self.letters.iter().map(|l| l.direction)
    }

    /// The word with parities stripped.
    pub fn skeleton(&self) -> DirWord {
        DirWord::from_directions(self.directions())
    }

    pub fn contains_reverse(&self) -> bool {
        self.directions().any(|d| d == Direction::Reverse)
    }

    /// Checks the parity alternation law: after a turn the parity flips,
    /// after a straight letter it is kept. Reports the first offending letter.
    pub fn check_alternation(&self) -> Result<()> {
        for (i, pair) in self.letters.windows(2).enumerate() {
            let (x, y) = (pair[0], pair[1]);
            let (Some(px), Some(py)) = (x.parity, y.parity) else {
                return Err(Error::MixedParity { position: i + 1 });
            };
            let expected = match x.direction {
                Direction::TurnLeft | Direction::TurnRight => px.flip(),
                Direction::Straight => px,
                Direction::Reverse => {
                    return Err(Error::UnexpectedLetter {
                        position: i + 1,
                        found: 'v',
                    })
                }
            };
            if py != expected {
                return Err(Error::ParityBreak { position: i + 2 });
            }
        }
        Ok(())
    }

    /// Parity the letter following this word would carry under the
    /// alternation law, or `None` for raw or empty words.
    pub fn parity_after(&self) -> Option<Parity> {
        let last = self.letters.last()?;
        let p = last.parity?;
        Some(if last.direction.is_turn() {
            p.flip()
        } else {
            p
        })
    }
}

impl fmt::Display for DirWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

/// Keys of the six boundary productions in table order.
pub const PRODUCTION_KEYS: [(Direction, Parity); 6] = [
    (Direction::TurnLeft, Parity::Even),
    (Direction::TurnRight, Parity::Even),
    (Direction::TurnLeft, Parity::Odd),
    (Direction::TurnRight, Parity::Odd),
    (Direction::Straight, Parity::Even),
    (Direction::Straight, Parity::Odd),
];

/// The boundary L-system: one finished production per letter
/// `L`, `R`, `l`, `r`, `S`, `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySystem {
    // Indexed as PRODUCTION_KEYS.
    productions: [DirWord; 6],
}

fn key_index(direction: Direction, parity: Parity) -> Option<usize> {
    PRODUCTION_KEYS
        .iter()
        .position(|&k| k == (direction, parity))
}

impl BoundarySystem {
    /// Builds a system from productions given in table order
    /// (`L`, `R`, `l`, `r`, `S`, `s`), validating each one.
    pub fn new(productions: [DirWord; 6]) -> Result<BoundarySystem> {
        for word in &productions {
            if word.is_empty() {
                return Err(Error::Empty);
            }
            if !word.is_finished() {
                return Err(Error::MixedParity { position: 1 });
            }
            if let Some(i) = word.directions().position(|d| d == Direction::Reverse) {
                return Err(Error::UnexpectedLetter {
                    position: i + 1,
                    found: 'v',
                });
            }
            word.check_alternation()?;
        }
        Ok(BoundarySystem { productions })
    }

    /// Parses six finished words in table order.
    pub fn parse(words: [&str; 6]) -> Result<BoundarySystem> {
        let mut parsed: [DirWord; 6] = Default::default();
        for (slot, text) in parsed.iter_mut().zip(words) {
            *slot = DirWord::parse_finished(text)?;
        }
        BoundarySystem::new(parsed)
    }

    /// Production for a finished letter. Panics on `Reverse`.
    pub fn production(&self, direction: Direction, parity: Parity) -> &DirWord {
        let i = key_index(direction, parity).expect("no production for reverse");
        &self.productions[i]
    }

    pub fn production_for(&self, letter: DirLetter) -> Option<&DirWord> {
        let i = key_index(letter.direction, letter.parity?)?;
        Some(&self.productions[i])
    }

    /// `(key letter, production)` pairs in table order.
    /// Productions in the order L, R, l, r, S, s.
    pub fn productions(&self) -> &[DirWord; 6] {
        &self.productions
    }

    pub fn entries(&self) -> impl Iterator<Item = (char, &DirWord)> {
        PRODUCTION_KEYS
            .iter()
            .zip(&self.productions)
            .map(|(&(d, p), w)| (DirLetter::finished(d, p).to_char(), w))
    }
}

impl fmt::Display for BoundarySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (key, word) in self.entries() {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{key}={word}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_for_both_alphabets() {
        assert_eq!(DirWord::parse_raw("RvRsL").unwrap().to_string(), "RvRsL");
        assert_eq!(
            DirWord::parse_finished("LrSRrLslLrL").unwrap().to_string(),
            "LrSRrLslLrL"
        );
        assert!(DirWord::parse_raw("Rl").is_err());
        assert!(DirWord::parse_finished("Lv").is_err());
        assert!(DirWord::parse_finished("L R").is_err());
    }

    #[test]
    fn mixed_parity_is_rejected() {
        let letters = vec![
            DirLetter::finished(Direction::TurnLeft, Parity::Even),
            DirLetter::raw(Direction::Straight),
        ];
        assert_eq!(
            DirWord::new(letters),
            Err(Error::MixedParity { position: 2 })
        );
    }

    #[test]
    fn alternation_law() {
        assert!(DirWord::parse_finished("Ll")
            .unwrap()
            .check_alternation()
            .is_ok());
        assert!(DirWord::parse_finished("SSRsrR")
            .unwrap()
            .check_alternation()
            .is_ok());
        assert_eq!(
            DirWord::parse_finished("rRL").unwrap().check_alternation(),
            Err(Error::ParityBreak { position: 3 })
        );
        assert_eq!(
            DirWord::parse_finished("Ss").unwrap().check_alternation(),
            Err(Error::ParityBreak { position: 2 })
        );
    }

    #[test]
    fn boundary_system_validates_productions() {
        let heighway = BoundarySystem::parse(["Ll", "S", "S", "Rr", "Lr", "Rl"]).unwrap();
        assert_eq!(heighway.to_string(), "L=Ll,R=S,l=S,r=Rr,S=Lr,s=Rl");
        assert_eq!(
            heighway
                .production(Direction::TurnRight, Parity::Odd)
                .to_string(),
            "Rr"
        );
        assert!(BoundarySystem::parse(["LL", "S", "S", "Rr", "Lr", "Rl"]).is_err());
        assert!(BoundarySystem::parse(["", "S", "S", "Rr", "Lr", "Rl"]).is_err());
    }
}
