//! Independent geometric check of derived boundary systems.
//!
//! Every folding edge is thickened to the diamond that has the edge as a
//! diagonal. Diamonds are the unit cells of the lattice rotated by 45°, so the
//! union of the diamonds of a folding path is a polyomino on that lattice. Its
//! boundary is traced directly from the cells and compared, segment for
//! segment, with the rendered boundary words.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{
    boundary_start_headings, render_boundary, render_fold, GridPoint, Heading, LatticePath, Segment,
};
use crate::words::{
    expand_boundary, expand_fold, BoundarySystem, DirLetter, DirWord, Direction, ExpansionCap,
    FoldLetter, FoldingSystem, Parity,
};

/// A unit cell of the rotated lattice, indexed by `u = (x + y - 1) / 2` and
/// `v = (x - y - 1) / 2` of its centre `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub u: i64,
    pub v: i64,
}

impl Cell {
    /// The cell whose diamond has the folding edge `a`-`b` as a diagonal.
    pub fn of_edge(a: GridPoint, b: GridPoint) -> Cell {
        let mx = (a.x + b.x) / 2;
        let my = (a.y + b.y) / 2;
        debug_assert!((mx + my).rem_euclid(2) == 1, "not a folding edge");
        Cell {
            u: (mx + my - 1).div_euclid(2),
            v: (mx - my - 1).div_euclid(2),
        }
    }

    /// Centre of the diamond, which is the midpoint of its folding edge.
    pub fn centre(self) -> GridPoint {
        GridPoint::new(self.u + self.v + 1, self.u - self.v)
    }

    /// The folding edge this cell belongs to, endpoints in sorted order.
    pub fn edge(self) -> Segment {
        let c = self.centre();
        if c.x.rem_euclid(2) == 1 {
            Segment::new(c - GridPoint::new(1, 0), c + GridPoint::new(1, 0))
        } else {
            Segment::new(c - GridPoint::new(0, 1), c + GridPoint::new(0, 1))
        }
    }

    /// Sides in counterclockwise order as `(from, to, neighbour)`, so the
    /// cell lies to the left of each directed side.
    fn sides(self) -> [(GridPoint, GridPoint, Cell); 4] {
        let c = self.centre();
        let east = c + GridPoint::new(1, 0);
        let north = c + GridPoint::new(0, 1);
        let west = c + GridPoint::new(-1, 0);
        let south = c + GridPoint::new(0, -1);
        let Cell { u, v } = self;
        [
            (east, north, Cell { u: u + 1, v }),
            (north, west, Cell { u, v: v - 1 }),
            (west, south, Cell { u: u - 1, v }),
            (south, east, Cell { u, v: v + 1 }),
        ]
    }
}

#[derive(Debug, Clone, Default)]
pub struct DiamondRegion {
    pub cells: HashSet<Cell>,
}

impl DiamondRegion {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// One diamond per edge of a folding path. Fails on a repeated edge.
pub fn diamonds_of_path(p: &LatticePath) -> Result<DiamondRegion> {
    let mut cells = HashSet::with_capacity(p.edge_count());
    for (i, w) in p.vertices.windows(2).enumerate() {
        if !cells.insert(Cell::of_edge(w[0], w[1])) {
            return Err(Error::DuplicateCell { edge: i });
        }
    }
    Ok(DiamondRegion { cells })
}

/// A closed boundary curve. The first vertex is not repeated at the end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryLoop {
    pub vertices: Vec<GridPoint>,
}

impl BoundaryLoop {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| Segment::new(self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Twice the signed area; positive for counterclockwise loops.
    pub fn doubled_signed_area(&self) -> i64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let a = self.vertices[i];
                let b = self.vertices[(i + 1) % n];
                a.x * b.y - b.x * a.y
            })
            .sum()
    }
}

/// Boundary loops of a region, the outer loop first.
///
/// Each loop keeps the region on its left, so the outer loop runs
/// counterclockwise and holes clockwise. Where two cells touch only at a
/// corner the trace turns to stay on the current cell, which treats such cells
/// as not adjacent.
pub fn trace_boundary(r: &DiamondRegion) -> Vec<BoundaryLoop> {
    let mut outgoing: HashMap<GridPoint, Vec<GridPoint>> = HashMap::new();
    let mut cells: Vec<Cell> = r.cells.iter().copied().collect();
    cells.sort_unstable();
    for cell in cells {
        for (from, to, neighbour) in cell.sides() {
            if !r.cells.contains(&neighbour) {
                outgoing.entry(from).or_default().push(to);
            }
        }
    }

    let mut sides: Vec<(GridPoint, GridPoint)> = outgoing
        .iter()
        .flat_map(|(&from, tos)| tos.iter().map(move |&to| (from, to)))
        .collect();
    sides.sort_unstable();

    // Every side has exactly one successor, so the loops are the cycles of a
    // permutation. Sides are visited in sorted order; the smallest one starts
    // at the minimal vertex, which lies on the outer loop.
    let mut used: HashSet<(GridPoint, GridPoint)> = HashSet::with_capacity(sides.len());
    let mut loops = Vec::new();
    for &first in &sides {
        if used.contains(&first) {
            continue;
        }
        let mut vertices = Vec::new();
        let (mut from, mut to) = first;
        loop {
            used.insert((from, to));
            vertices.push(from);
            let next = next_side(&outgoing, from, to);
            (from, to) = (to, next);
            if (from, to) == first {
                break;
            }
        }
        loops.push(BoundaryLoop { vertices });
    }
    loops
}

/// Chooses the side leaving `to` after arriving from `from`, preferring a left
/// turn, then straight on, then a right turn.
fn next_side(
    outgoing: &HashMap<GridPoint, Vec<GridPoint>>,
    from: GridPoint,
    to: GridPoint,
) -> GridPoint {
    let incoming = to - from;
    let rank = |next: &&GridPoint| {
        let out = **next - to;
        let cross = incoming.x * out.y - incoming.y * out.x;
        let dot = incoming.x * out.x + incoming.y * out.y;
        match (cross.signum(), dot.signum()) {
            (1, _) => 0,
            (0, 1) => 1,
            (-1, _) => 2,
            _ => 3,
        }
    };
    *outgoing
        .get(&to)
        .and_then(|tos| tos.iter().min_by_key(rank))
        .expect("boundary sides of a finite region form closed loops")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The `τⁿ(R)` curve on the left of the folding path.
    Left,
    /// The `τⁿ(L)` curve on the right of the folding path.
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    FoldNotSelfAvoiding {
        edge: usize,
    },
    RepeatedSegment {
        side: Side,
        segment: Segment,
    },
    StartMismatch {
        left: GridPoint,
        right: GridPoint,
    },
    EndMismatch {
        fold: GridPoint,
        left: GridPoint,
        right: GridPoint,
    },
    NotSimplyConnected {
        loops: usize,
    },
    /// On the traced boundary but on neither rendered curve.
    MissingSegment {
        segment: Segment,
    },
    /// On a rendered curve but not on the traced boundary.
    ExtraSegment {
        side: Side,
        segment: Segment,
    },
}

fn fmt_point(p: GridPoint) -> String {
    format!("({},{})", p.x, p.y)
}

fn fmt_segment(s: Segment) -> String {
    format!("{}-{}", fmt_point(s.0), fmt_point(s.1))
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Mismatch::FoldNotSelfAvoiding { edge } => {
                write!(f, "folding path reuses edge {edge}")
            }
            Mismatch::RepeatedSegment { side, segment } => {
                write!(f, "{side} curve repeats segment {}", fmt_segment(segment))
            }
            Mismatch::StartMismatch { left, right } => write!(
                f,
                "curves start apart: left {}, right {}",
                fmt_point(left),
                fmt_point(right)
            ),
            Mismatch::EndMismatch { fold, left, right } => write!(
                f,
                "end points differ: fold {}, left {}, right {}",
                fmt_point(fold),
                fmt_point(left),
                fmt_point(right)
            ),
            Mismatch::NotSimplyConnected { loops } => {
                write!(f, "region not simply connected ({loops} boundary loops)")
            }
            Mismatch::MissingSegment { segment } => write!(
                f,
                "boundary segment {} is on neither curve",
                fmt_segment(segment)
            ),
            Mismatch::ExtraSegment { side, segment } => write!(
                f,
                "{side} curve segment {} is not on the boundary",
                fmt_segment(segment)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub level: u32,
    pub fold_edges: usize,
    /// Length of the outer boundary loop, zero if tracing was not reached.
    pub loop_segments: usize,
    pub loops: usize,
    pub left_segments: usize,
    pub right_segments: usize,
    pub mismatch: Option<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

fn first_repeat(p: &LatticePath) -> Option<Segment> {
    let mut seen = HashSet::with_capacity(p.edge_count());
    p.segments().find(|s| !seen.insert(*s))
}

/// Checks at level `n` that `τⁿ(R)` and `τⁿ(L)` trace exactly the boundary of
/// the diamond region of `σⁿ(A)`.
///
/// Fails with an error only if an expansion exceeds `cap`; geometric
/// disagreements are reported in the returned [`VerifyReport`].
pub fn verify_boundary(
    sys: &FoldingSystem,
    tau: &BoundarySystem,
    n: u32,
    cap: ExpansionCap,
) -> Result<VerifyReport> {
    let fold_word = expand_fold(sys, FoldLetter::MoveA, n, cap)?;
    let axiom = |d| DirWord::new(vec![DirLetter::finished(d, Parity::Even)]).expect("one letter");
    let left_word = expand_boundary(tau, &axiom(Direction::TurnRight), n, cap)?;
    let right_word = expand_boundary(tau, &axiom(Direction::TurnLeft), n, cap)?;

    let fold = render_fold(&fold_word, GridPoint::ORIGIN, Heading::East);
    drop(fold_word);
    let (left_heading, right_heading) = boundary_start_headings(Heading::East);
    let left = render_boundary(&left_word, GridPoint::ORIGIN, left_heading);
    let right = render_boundary(&right_word, GridPoint::ORIGIN, right_heading);

    let mut report = VerifyReport {
        level: n,
        fold_edges: fold.edge_count(),
        loop_segments: 0,
        loops: 0,
        left_segments: left.edge_count(),
        right_segments: right.edge_count(),
        mismatch: None,
    };
    report.mismatch = compare(&fold, &left, &right, &mut report);
    Ok(report)
}

fn compare(
    fold: &LatticePath,
    left: &LatticePath,
    right: &LatticePath,
    report: &mut VerifyReport,
) -> Option<Mismatch> {
    for (side, path) in [(Side::Left, left), (Side::Right, right)] {
        if let Some(segment) = first_repeat(path) {
            return Some(Mismatch::RepeatedSegment { side, segment });
        }
    }
    let region = match diamonds_of_path(fold) {
        Ok(r) => r,
        Err(Error::DuplicateCell { edge }) => {
            return Some(Mismatch::FoldNotSelfAvoiding { edge });
        }
        Err(e) => unreachable!("unexpected error {e}"),
    };
    let loops = trace_boundary(&region);
    report.loops = loops.len();
    report.loop_segments = loops.first().map_or(0, BoundaryLoop::len);
    if loops.len() != 1 {
        return Some(Mismatch::NotSimplyConnected { loops: loops.len() });
    }
    let outer = &loops[0];

    // Segments first, in path order, so that a wrong rule is reported at
    // the first place its curve leaves the boundary.
    let on_loop: HashSet<Segment> = outer.segments().collect();
    for (side, path) in [(Side::Left, left), (Side::Right, right)] {
        if let Some(segment) = path.segments().find(|s| !on_loop.contains(s)) {
            return Some(Mismatch::ExtraSegment { side, segment });
        }
    }
    let on_curves: HashSet<Segment> = left.segments().chain(right.segments()).collect();
    if let Some(segment) = outer.segments().find(|s| !on_curves.contains(s)) {
        return Some(Mismatch::MissingSegment { segment });
    }
    if left.start != right.start || left.start != fold.start {
        return Some(Mismatch::StartMismatch {
            left: left.start,
            right: right.start,
        });
    }
    if left.end() != fold.end() || right.end() != fold.end() {
        return Some(Mismatch::EndMismatch {
            fold: fold.end(),
            left: left.end(),
            right: right.end(),
        });
    }
    None
}
