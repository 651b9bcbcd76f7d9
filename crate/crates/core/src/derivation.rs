//! Derivation of the boundary L-system `τ` from a folding rule `σ(A)`.
//!
//! The pipeline builds raw left and right boundary words with backtracking
//! (`create_left`, `create_right`), removes the backtracking with the
//! three-letter rewriting rules of [`ReductionRule`], drops the alternate
//! straight placeholders (`thin`), mirrors words for the odd-square letters
//! (`invert`), builds the straight-segment words and finally assigns square
//! parities (`alternate_cases`).

use crate::error::{Error, Result};
use crate::words::{
    BoundarySystem, DirLetter, DirWord, Direction, FoldLetter, FoldWord, FoldingSystem, Parity,
};

use Direction::{Reverse, Straight, TurnLeft, TurnRight};

/// The nine rewriting rules `X v Z -> W` that remove a backtracking step.
pub struct ReductionRule;

impl ReductionRule {
    pub const TABLE: [(Direction, Direction, Direction); 9] = [
        (TurnRight, TurnRight, Straight),
        (Straight, TurnRight, TurnLeft),
        (TurnRight, Straight, TurnLeft),
        (TurnLeft, TurnLeft, Straight),
        (Straight, TurnLeft, TurnRight),
        (TurnLeft, Straight, TurnRight),
        (TurnRight, TurnLeft, Reverse),
        (Straight, Straight, Reverse),
        (TurnLeft, TurnRight, Reverse),
    ];

    /// Replacement for `before v after`, or `None` if either neighbour is
    /// itself a reverse.
    pub fn apply(before: Direction, after: Direction) -> Option<Direction> {
        Self::TABLE
            .iter()
            .find(|&&(x, z, _)| x == before && z == after)
            .map(|&(_, _, w)| w)
    }
}

/// Order in which reverse letters are eliminated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReductionOrder {
    #[default]
    LeftmostFirst,
    RightmostFirst,
}

fn map_fold_word(w: &FoldWord, plus: Direction, minus: Direction, mv: Direction) -> DirWord {
    DirWord::from_directions(w.letters().iter().map(|&l| match l {
        FoldLetter::MoveA | FoldLetter::MoveB => mv,
        FoldLetter::TurnPlus => plus,
        FoldLetter::TurnMinus => minus,
    }))
}

/// Left boundary with backtracking: `A, B, +, -` become `R, R, s, v`.
pub fn create_left(w: &FoldWord) -> DirWord {
    map_fold_word(w, Straight, Reverse, TurnRight)
}

/// Right boundary with backtracking: `A, B, +, -` become `L, L, v, s`.
pub fn create_right(w: &FoldWord) -> DirWord {
    map_fold_word(w, Reverse, Straight, TurnLeft)
}

/// Removes every reverse letter, leftmost first.
pub fn reduce_word(w: &DirWord) -> Result<DirWord> {
    reduce_word_with(w, ReductionOrder::LeftmostFirst)
}

pub fn reduce_word_with(w: &DirWord, order: ReductionOrder) -> Result<DirWord> {
    let mut dirs: Vec<Direction> = w.directions().collect();
    while reduce_once(&mut dirs, order)? {}
    Ok(DirWord::from_directions(dirs))
}

/// Every intermediate word of the reduction, starting with the (raw) input
/// and ending with the fully reduced word.
pub fn reduction_steps(w: &DirWord, order: ReductionOrder) -> Result<Vec<DirWord>> {
    let mut dirs: Vec<Direction> = w.directions().collect();
    let mut steps = vec![DirWord::from_directions(dirs.iter().copied())];
    while reduce_once(&mut dirs, order)? {
        steps.push(DirWord::from_directions(dirs.iter().copied()));
    }
    Ok(steps)
}

/// Rewrites one `X v Z` window. Returns `false` once no reverse is left.
fn reduce_once(dirs: &mut Vec<Direction>, order: ReductionOrder) -> Result<bool> {
    let found = match order {
        ReductionOrder::LeftmostFirst => dirs.iter().position(|&d| d == Reverse),
        ReductionOrder::RightmostFirst => dirs.iter().rposition(|&d| d == Reverse),
    };
    let Some(j) = found else {
        return Ok(false);
    };
    if j == 0 {
        return Err(Error::ReverseAtStart);
    }
    if j + 1 == dirs.len() {
        return Err(Error::ReverseAtEnd { position: j + 1 });
    }
    if dirs[j - 1] == Reverse {
        return Err(Error::AdjacentReverse { position: j });
    }
    if dirs[j + 1] == Reverse {
        return Err(Error::AdjacentReverse { position: j + 1 });
    }
    let replacement = ReductionRule::apply(dirs[j - 1], dirs[j + 1])
        .expect("rule table covers every pair of non-reverse letters");
    dirs.splice(j - 1..=j + 1, [replacement]);
    Ok(true)
}

/// Keeps the letters at odd 1-based positions. Every even position must hold
/// a straight placeholder.
pub fn thin(w: &DirWord) -> Result<DirWord> {
    if let Some(i) = w.directions().position(|d| d == Reverse) {
        return Err(Error::UnexpectedLetter {
            position: i + 1,
            found: 'v',
        });
    }
    if let Some(i) = w
        .directions()
        .enumerate()
        .find(|&(i, d)| i % 2 == 1 && d != Straight)
        .map(|(i, _)| i)
    {
        return Err(Error::ThinningFault { position: i + 1 });
    }
    Ok(DirWord::from_directions(w.directions().step_by(2)))
}

/// Reverses the word and swaps left and right turns. Parities are dropped.
pub fn invert(w: &DirWord) -> DirWord {
    DirWord::from_directions(w.directions().rev().map(Direction::mirrored))
}

/// Reduced but unthinned words for the straight letters `S` and `s`:
/// `left ++ v ++ invert(right)` and `invert(right) ++ v ++ left`.
pub fn make_straight_words(left: &DirWord, right: &DirWord) -> Result<(DirWord, DirWord)> {
    let right_inv = invert(right);
    let joined = |a: &DirWord, b: &DirWord| {
        DirWord::from_directions(
            a.directions()
                .chain(std::iter::once(Reverse))
                .chain(b.directions()),
        )
    };
    let even = reduce_word(&joined(left, &right_inv))?;
    let odd = reduce_word(&joined(&right_inv, left))?;
    Ok((even, odd))
}

/// Initial parity of `τ(L)`, `τ(R)` and `τ(S)`.
pub fn case_for_upper(w: &FoldWord) -> Parity {
    if w.first() == FoldLetter::MoveA {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Initial parity of `τ(l)`, `τ(r)` and `τ(s)`.
pub fn case_for_lower(w: &FoldWord) -> Parity {
    if w.last() == FoldLetter::MoveA {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// Assigns parities: the first letter gets `initial`, a turn flips the parity
/// of the next letter, a straight letter keeps it.
pub fn alternate_cases(w: &DirWord, initial: Parity) -> DirWord {
    let mut parity = initial;
    let letters = w
        .directions()
        .map(|d| {
            let letter = DirLetter::finished(d, parity);
            if d.is_turn() {
                parity = parity.flip();
            }
            letter
        })
        .collect();
    DirWord::new(letters).expect("uniformly finished")
}

/// Intermediate words of one derivation, kept for inspection and tests.
#[derive(Debug, Clone)]
pub struct Derivation {
    pub left_raw: DirWord,
    pub right_raw: DirWord,
    pub left_reduced: DirWord,
    pub right_reduced: DirWord,
    pub straight_even_reduced: DirWord,
    pub straight_odd_reduced: DirWord,
    pub upper: Parity,
    pub lower: Parity,
    pub system: BoundarySystem,
}

fn stage<T>(production: &'static str, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::InvalidFoldingCurve {
        production,
        source: Box::new(e),
    })
}

pub fn derive_with_trace(sys: &FoldingSystem) -> Result<Derivation> {
    let sigma = sys.prod_a();
    let left_raw = create_left(sigma);
    let right_raw = create_right(sigma);
    let left_reduced = stage("left", reduce_word(&left_raw))?;
    let right_reduced = stage("right", reduce_word(&right_raw))?;
    let (straight_even_reduced, straight_odd_reduced) = stage(
        "straight",
        make_straight_words(&left_reduced, &right_reduced),
    )?;

    let left = stage("left", thin(&left_reduced))?;
    let right = stage("right", thin(&right_reduced))?;
    let straight_even = stage("straight", thin(&straight_even_reduced))?;
    let straight_odd = stage("straight", thin(&straight_odd_reduced))?;

    let upper = case_for_upper(sigma);
    let lower = case_for_lower(sigma);

    // The left side of A is traced by R, the right side by L.
    let system = BoundarySystem::new([
        alternate_cases(&right, upper),
        alternate_cases(&left, upper),
        alternate_cases(&invert(&left), lower),
        alternate_cases(&invert(&right), lower),
        alternate_cases(&straight_even, upper),
        alternate_cases(&straight_odd, lower),
    ])?;

    Ok(Derivation {
        left_raw,
        right_raw,
        left_reduced,
        right_reduced,
        straight_even_reduced,
        straight_odd_reduced,
        upper,
        lower,
        system,
    })
}

/// Computes the boundary L-system of a folding system.
pub fn derive_boundary_system(sys: &FoldingSystem) -> Result<BoundarySystem> {
    derive_with_trace(sys).map(|d| d.system)
}
