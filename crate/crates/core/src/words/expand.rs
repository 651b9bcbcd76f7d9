use crate::error::{Error, Result};

use super::dir::{BoundarySystem, DirLetter, DirWord, PRODUCTION_KEYS};
use super::fold::{FoldLetter, FoldWord, FoldingSystem};

/// Upper bound on the number of letters an expansion may produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpansionCap(pub usize);

impl ExpansionCap {
    pub const DEFAULT_LETTERS: usize = 1_000_000;

    pub fn letters(self) -> usize {
        self.0
    }

    fn check(self, required: u128) -> Result<()> {
        if required > self.0 as u128 {
            Err(Error::CapExceeded {
                required,
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for ExpansionCap {
    fn default() -> Self {
        ExpansionCap(Self::DEFAULT_LETTERS)
    }
}

/// Length of `σⁿ(start)` in letters, saturating at `u128::MAX`.
pub fn fold_expansion_len(sys: &FoldingSystem, n: u32) -> u128 {
    let m = sys.prod_a().move_count() as u128;
    m.checked_pow(n)
        .and_then(|moves| moves.checked_mul(2))
        .map_or(u128::MAX, |l| l - 1)
}

/// Applies `σ` `n` times to the single move letter `start`.
pub fn expand_fold(
    sys: &FoldingSystem,
    start: FoldLetter,
    n: u32,
    cap: ExpansionCap,
) -> Result<FoldWord> {
    if !start.is_move() {
        return Err(Error::MoveExpected { position: 1 });
    }
    cap.check(fold_expansion_len(sys, n))?;
    let mut word = vec![start];
    for _ in 0..n {
        let mut next = Vec::with_capacity(word.len() * sys.prod_a().len());
        for &letter in &word {
            next.extend_from_slice(sys.production(letter));
        }
        word = next;
    }
    Ok(FoldWord::from_letters_unchecked(word))
}

/// Applies `τ` `n` times to a finished word, letter by letter.
///
/// Parities inside `word` are not checked against the alternation law; use
/// [`DirWord::check_alternation`] for that.
pub fn expand_boundary(
    sys: &BoundarySystem,
    word: &DirWord,
    n: u32,
    cap: ExpansionCap,
) -> Result<DirWord> {
    if word.is_empty() {
        return Err(Error::Empty);
    }
    if !word.is_finished() {
        return Err(Error::NotFinished);
    }
    if let Some(i) = word
        .letters()
        .iter()
        .position(|l| sys.production_for(*l).is_none())
    {
        return Err(Error::UnexpectedLetter {
            position: i + 1,
            found: 'v',
        });
    }

    // Letter counts per production key let the final length be checked
    // before anything is built.
    let index = |l: &DirLetter| {
        PRODUCTION_KEYS
            .iter()
            .position(|&(d, p)| l.direction == d && l.parity == Some(p))
            .expect("finished letter")
    };
    let mut counts = [0u128; 6];
    for l in word.letters() {
        counts[index(l)] += 1;
    }
    let mut produced = [[0u128; 6]; 6];
    for (i, &(d, p)) in PRODUCTION_KEYS.iter().enumerate() {
        for l in sys.production(d, p).letters() {
            produced[i][index(l)] += 1;
        }
    }
    for _ in 0..n {
        let mut next = [0u128; 6];
        for (i, &c) in counts.iter().enumerate() {
            for (j, slot) in next.iter_mut().enumerate() {
                *slot = slot.saturating_add(c.saturating_mul(produced[i][j]));
            }
        }
        counts = next;
        cap.check(counts.iter().fold(0u128, |a, &b| a.saturating_add(b)))?;
    }
    cap.check(word.len() as u128)?;

    let mut letters = word.letters().to_vec();
    for _ in 0..n {
        let mut next = Vec::with_capacity(letters.len() * 2);
        for l in &letters {
            next.extend_from_slice(sys.production_for(*l).expect("checked").letters());
        }
        letters = next;
    }
    Ok(DirWord::from_letters_unchecked(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::fold::parse_fold_word;

    fn heighway() -> BoundarySystem {
        BoundarySystem::parse(["Ll", "S", "S", "Rr", "Lr", "Rl"]).unwrap()
    }

    /// One parallel rewriting step over the text form, independent of the
    /// typed expander.
    fn rewrite_text(word: &str, sigma_a: &str, sigma_b: &str) -> String {
        word.chars()
            .map(|c| match c {
                'A' => sigma_a.to_string(),
                'B' => sigma_b.to_string(),
                other => other.to_string(),
            })
            .collect()
    }

    #[test]
    fn fold_expansion_examples() {
        let sys = FoldingSystem::parse("A-B").unwrap();
        let cap = ExpansionCap::default();
        let e = |n| {
            expand_fold(&sys, FoldLetter::MoveA, n, cap)
                .unwrap()
                .to_string()
        };
        assert_eq!(e(0), "A");
        assert_eq!(e(1), "A-B");
        assert_eq!(e(2), "A-B-A+B");
        let mut text = "A".to_string();
        for n in 0..8 {
            assert_eq!(e(n), text);
            text = rewrite_text(&text, "A-B", "A+B");
        }
    }

    #[test]
    fn fold_expansion_respects_cap() {
        let sys = FoldingSystem::parse("A-B").unwrap();
        let err = expand_fold(&sys, FoldLetter::MoveA, 5, ExpansionCap(62)).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                required: 63,
                cap: 62
            }
        );
        assert!(expand_fold(&sys, FoldLetter::MoveA, 5, ExpansionCap(63)).is_ok());
        assert!(expand_fold(&sys, FoldLetter::MoveA, 200, ExpansionCap::default()).is_err());
        assert!(expand_fold(&sys, FoldLetter::TurnPlus, 1, ExpansionCap::default()).is_err());
    }

    #[test]
    fn fold_move_and_turn_counts() {
        let sys = FoldingSystem::new(parse_fold_word("A-B+A-B+A+B-A+B+A").unwrap());
        for n in 0..5 {
            let w = expand_fold(&sys, FoldLetter::MoveA, n, ExpansionCap::default()).unwrap();
            let moves = w.letters().iter().filter(|l| l.is_move()).count();
            assert_eq!(moves, 9usize.pow(n));
            assert_eq!(w.len() - moves, 9usize.pow(n) - 1);
            assert_eq!(w.len() as u128, fold_expansion_len(&sys, n));
        }
    }

    #[test]
    fn boundary_expansion_examples() {
        let tau = heighway();
        let cap = ExpansionCap::default();
        let r = DirWord::parse_finished("R").unwrap();
        let l = DirWord::parse_finished("L").unwrap();
        assert_eq!(expand_boundary(&tau, &r, 0, cap).unwrap().to_string(), "R");
        assert_eq!(expand_boundary(&tau, &r, 1, cap).unwrap().to_string(), "S");
        assert_eq!(expand_boundary(&tau, &l, 1, cap).unwrap().to_string(), "Ll");
        assert_eq!(
            expand_boundary(&tau, &l, 2, cap).unwrap().to_string(),
            "LlS"
        );
    }

    #[test]
    fn boundary_expansion_rejects_raw_and_capped_words() {
        let tau = heighway();
        let raw = DirWord::parse_raw("LsL").unwrap();
        assert_eq!(
            expand_boundary(&tau, &raw, 1, ExpansionCap::default()),
            Err(Error::NotFinished)
        );
        let l = DirWord::parse_finished("L").unwrap();
        // τ^10(L) of the Heighway system is far longer than 20 letters.
        assert!(matches!(
            expand_boundary(&tau, &l, 10, ExpansionCap(20)),
            Err(Error::CapExceeded { cap: 20, .. })
        ));
    }

    #[test]
    fn boundary_expansion_is_total_on_inconsistent_parities() {
        let tau = heighway();
        let odd = DirWord::parse_finished("LL").unwrap();
        assert!(odd.check_alternation().is_err());
        assert_eq!(
            expand_boundary(&tau, &odd, 1, ExpansionCap::default())
                .unwrap()
                .to_string(),
            "LlLl"
        );
    }
}
