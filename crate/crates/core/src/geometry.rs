//! Exact lattice rendering in doubled integer coordinates.
//!
//! Folding paths step between square centres, which sit on points with both
//! coordinates even; one folding step spans two units. Boundary letters move
//! half a unit diagonally to a square corner (both coordinates odd), turn, and
//! move another half unit to the next square centre.

use std::collections::HashMap;
use std::ops::{Add, Sub};

use crate::words::{DirWord, Direction, FoldLetter, FoldWord, Parity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub const ORIGIN: GridPoint = GridPoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> GridPoint {
        GridPoint { x, y }
    }

    /// Rotation by a quarter turn counterclockwise about the origin.
    pub fn rotate_quarter(self) -> GridPoint {
        GridPoint::new(-self.y, self.x)
    }

    pub fn is_square_centre(self) -> bool {
        self.x.rem_euclid(2) == 0 && self.y.rem_euclid(2) == 0
    }

    pub fn is_square_corner(self) -> bool {
        self.x.rem_euclid(2) == 1 && self.y.rem_euclid(2) == 1
    }

    /// Checkerboard parity of the square centred at this point, with the
    /// square at the origin even.
    pub fn square_parity(self) -> Parity {
        debug_assert!(self.is_square_centre());
        Parity::from_bit((self.x + self.y) / 2)
    }
}

impl Add for GridPoint {
    type Output = GridPoint;
    fn add(self, rhs: GridPoint) -> GridPoint {
        GridPoint::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for GridPoint {
    type Output = GridPoint;
    fn sub(self, rhs: GridPoint) -> GridPoint {
        GridPoint::new(self.x - rhs.x, self.y - rhs.y)
    }
}

/// One of the eight compass headings, in counterclockwise order from east.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Heading {
    East,
    NorthEast,
    North,
    NorthWest,
    West,
    SouthWest,
    South,
    SouthEast,
}

impl Heading {
    const ORDER: [Heading; 8] = [
        Heading::East,
        Heading::NorthEast,
        Heading::North,
        Heading::NorthWest,
        Heading::West,
        Heading::SouthWest,
        Heading::South,
        Heading::SouthEast,
    ];

    fn index(self) -> i32 {
        self as i32
    }

    /// Rotates by `eighths` of a full turn, counterclockwise positive.
    pub fn rotate(self, eighths: i32) -> Heading {
        Self::ORDER[(self.index() + eighths).rem_euclid(8) as usize]
    }

    pub fn turn_left(self) -> Heading {
        self.rotate(2)
    }

    pub fn turn_right(self) -> Heading {
        self.rotate(-2)
    }

    pub fn is_axial(self) -> bool {
        self.index() % 2 == 0
    }

    pub fn is_diagonal(self) -> bool {
        !self.is_axial()
    }

    /// Unit step: `(±1, 0)`, `(0, ±1)` or `(±1, ±1)`.
    pub fn unit(self) -> GridPoint {
        let (x, y) = match self {
            Heading::East => (1, 0),
            Heading::NorthEast => (1, 1),
            Heading::North => (0, 1),
            Heading::NorthWest => (-1, 1),
            Heading::West => (-1, 0),
            Heading::SouthWest => (-1, -1),
            Heading::South => (0, -1),
            Heading::SouthEast => (1, -1),
        };
        GridPoint::new(x, y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    pub start: GridPoint,
    pub initial_heading: Heading,
    /// All vertices, starting with `start`.
    pub vertices: Vec<GridPoint>,
    pub final_heading: Heading,
}

impl LatticePath {
    pub fn end(&self) -> GridPoint {
        *self.vertices.last().expect("path has a start vertex")
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.vertices.windows(2).map(|w| Segment::new(w[0], w[1]))
    }
}

/// An undirected unit segment, endpoints stored in sorted order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment(pub GridPoint, pub GridPoint);

impl Segment {
    pub fn new(a: GridPoint, b: GridPoint) -> Segment {
        if a <= b {
            Segment(a, b)
        } else {
            Segment(b, a)
        }
    }
}

/// Turtle rendering of a folding word: `A` and `B` advance two units, `+`
/// turns right, `-` turns left.
pub fn render_fold(w: &FoldWord, start: GridPoint, heading: Heading) -> LatticePath {
    debug_assert!(start.is_square_centre() && heading.is_axial());
    let mut pos = start;
    let mut h = heading;
    let mut vertices = Vec::with_capacity(w.move_count() + 1);
    vertices.push(start);
    for &letter in w.letters() {
        match letter {
            FoldLetter::MoveA | FoldLetter::MoveB => {
                let u = h.unit();
                pos = pos + GridPoint::new(2 * u.x, 2 * u.y);
                vertices.push(pos);
            }
            FoldLetter::TurnPlus => h = h.turn_right(),
            FoldLetter::TurnMinus => h = h.turn_left(),
        }
    }
    LatticePath {
        start,
        initial_heading: heading,
        vertices,
        final_heading: h,
    }
}

/// Renders a boundary word: each letter is a diagonal half step, its turn,
/// and another half step. Parities do not affect the geometry; `Reverse`
/// renders as a there-and-back pair.
pub fn render_boundary(w: &DirWord, start: GridPoint, heading: Heading) -> LatticePath {
    debug_assert!(heading.is_diagonal());
    let mut pos = start;
    let mut h = heading;
    let mut vertices = Vec::with_capacity(2 * w.len() + 1);
    vertices.push(start);
    for d in w.directions() {
        pos = pos + h.unit();
        vertices.push(pos);
        h = h.rotate(d.rotation());
        pos = pos + h.unit();
        vertices.push(pos);
    }
    LatticePath {
        start,
        initial_heading: heading,
        vertices,
        final_heading: h,
    }
}

/// Start headings for the boundary curves of a folding edge heading
/// `fold_heading`: the left-side curve (the `R` family) is rotated 45°
/// counterclockwise, the right-side curve (the `L` family) 45° clockwise.
pub fn boundary_start_headings(fold_heading: Heading) -> (Heading, Heading) {
    debug_assert!(fold_heading.is_axial());
    (fold_heading.rotate(1), fold_heading.rotate(-1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfAvoidanceViolation {
    /// Edge `edge` (0-based) retraces edge `first`.
    EdgeReused { edge: usize, first: usize },
    /// The path crosses itself transversally at `vertex`, detected when
    /// leaving it along edge `edge`.
    Crossing { edge: usize, vertex: GridPoint },
}

impl SelfAvoidanceViolation {
    pub fn edge(self) -> usize {
        match self {
            SelfAvoidanceViolation::EdgeReused { edge, .. } => edge,
            SelfAvoidanceViolation::Crossing { edge, .. } => edge,
        }
    }
}

fn axial_index(d: GridPoint) -> u8 {
    match (d.x.signum(), d.y.signum()) {
        (1, 0) => 0,
        (0, 1) => 1,
        (-1, 0) => 2,
        (0, -1) => 3,
        _ => unreachable!("folding edges are axial"),
    }
}

/// Whether two chords of the circle of four axial directions interleave.
fn interleaved(a: (u8, u8), b: (u8, u8)) -> bool {
    let inside = |lo: u8, hi: u8, x: u8| lo < x && x < hi;
    let (lo, hi) = (a.0.min(a.1), a.0.max(a.1));
    inside(lo, hi, b.0) != inside(lo, hi, b.1)
        && ![lo, hi].contains(&b.0)
        && ![lo, hi].contains(&b.1)
}

/// Checks that a folding path neither retraces an edge nor crosses itself.
/// Touching at a vertex, where the path turns away, is allowed.
pub fn check_self_avoiding(p: &LatticePath) -> Result<(), SelfAvoidanceViolation> {
    let mut edges: HashMap<Segment, usize> = HashMap::with_capacity(p.edge_count());
    for (i, s) in p.segments().enumerate() {
        if let Some(&first) = edges.get(&s) {
            return Err(SelfAvoidanceViolation::EdgeReused { edge: i, first });
        }
        edges.insert(s, i);
    }

    // Direction pairs used at each pass through an interior vertex.
    let mut passes: HashMap<GridPoint, Vec<(u8, u8)>> = HashMap::new();
    for (i, w) in p.vertices.windows(3).enumerate() {
        let (prev, v, next) = (w[0], w[1], w[2]);
        let pair = (axial_index(prev - v), axial_index(next - v));
        let seen = passes.entry(v).or_default();
        if seen.iter().any(|&q| interleaved(q, pair)) {
            return Err(SelfAvoidanceViolation::Crossing {
                edge: i + 1,
                vertex: v,
            });
        }
        seen.push(pair);
    }
    Ok(())
}

/// Checks that every letter's case matches the parity of the square it
/// starts in, given the parity of the square at the path start. Returns the
/// 1-based position of the first mismatch.
pub fn check_parity_labels(
    w: &DirWord,
    start: GridPoint,
    heading: Heading,
    start_parity: Parity,
) -> Result<(), usize> {
    let path = render_boundary(w, start, heading);
    for (i, l) in w.letters().iter().enumerate() {
        let at = path.vertices[2 * i] - start;
        let expected = match Parity::from_bit((at.x + at.y) / 2) {
            Parity::Even => start_parity,
            Parity::Odd => start_parity.flip(),
        };
        if l.parity != Some(expected) {
            return Err(i + 1);
        }
    }
    Ok(())
}

/// Turn implied by a heading change, for tests and diagnostics.
pub fn direction_between(from: Heading, to: Heading) -> Direction {
    match (to.index() - from.index()).rem_euclid(8) {
        0 => Direction::Straight,
        2 => Direction::TurnLeft,
        4 => Direction::Reverse,
        6 => Direction::TurnRight,
        _ => unreachable!("turns are multiples of 90 degrees"),
    }
}
