//! Pavements: rectangulations built from excursions, and the way back.
//!
//! [`pave`] turns an excursion of length `n` into a partition of a rectangle
//! into `n` smaller rectangles by processing the vertices in order. Vertex
//! `(h, x, c)` places rectangle number `m` into slot `x` of the current
//! staircase frontier (slot 0 at the bottom-right end), and the colour
//! decides how much of the two frontier edges at that slot the rectangle
//! covers:
//!
//! * `w` covers both edges exactly and closes the corner,
//! * `b` covers a proper part of both and opens a second corner,
//! * `r` covers the vertical edge exactly and a proper left part of the
//!   horizontal one,
//! * `g` covers the horizontal edge exactly and a proper lower part of the
//!   vertical one.
//!
//! "Proper part" means a fresh cut strictly inside the edge, placed next to
//! the edge's far end. Cuts are kept as abstract ids in a total order per
//! axis, each fresh cut inserted immediately before the far end of the edge
//! it splits, so distinct placements never produce coinciding cuts and the
//! combinatorial structure does not depend on numeric coordinates. Final
//! coordinates are the positions in the cut order. The far-end rule is what
//! makes the construction injective: when a merge buries an old cut inside a
//! longer edge, a later split of that edge lands on the far side of the
//! buried cut, while splitting before the merge lands on the near side.
//!
//! [`procedure`] inverts the construction: it replays the staircase against a
//! given rectangulation, reading off which slot was used and which colour was
//! forced, and requires that exactly one leftmost vertex sequence survives.

mod frontier;
mod pave;
mod procedure;
mod render;

pub use pave::{pave, pave_steps, PaveError, PaveSteps};
pub use procedure::{procedure, ProcedureError};
pub use render::{render_ascii, render_svg};

use alloc::vec::Vec;
use core::fmt;

/// Axis-aligned rectangle on the compacted integer grid. `id` is the 1-based
/// placement index when the rectangulation came out of [`pave`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rect {
    pub id: usize,
    pub x_lo: i64,
    pub x_hi: i64,
    pub y_lo: i64,
    pub y_hi: i64,
}

/// Why a list of rectangles is not a valid rectangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RectError {
    Empty,
    /// Some rectangle has `x_lo >= x_hi` or `y_lo >= y_hi`.
    EmptySpan { id: usize },
    DuplicateId { id: usize },
    /// A unit cell of the bounding box is covered `count` times instead of
    /// exactly once.
    CoverageMismatch { x: i64, y: i64, count: usize },
    /// Four rectangle corners meet at one interior point.
    CrossJunction { x: i64, y: i64 },
}

impl fmt::Display for RectError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RectError::Empty => write!(f, "rectangulation has no rectangles"),
            RectError::EmptySpan { id } => write!(f, "rectangle {id} has an empty span"),
            RectError::DuplicateId { id } => write!(f, "rectangle id {id} appears twice"),
            RectError::CoverageMismatch { x, y, count } => {
                write!(f, "cell ({x}, {y}) is covered {count} times")
            }
            RectError::CrossJunction { x, y } => {
                write!(f, "four rectangles meet at ({x}, {y})")
            }
        }
    }
}

/// A partition of `[0, width] x [0, height]` into rectangles with no crossing
/// junctions, on compacted coordinates: every interior grid line carries at
/// least one rectangle side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rectangulation {
    rects: Vec<Rect>,
    width: i64,
    height: i64,
}

impl Rectangulation {
    /// Compacts the coordinates (order-preserving relabelling onto
    /// `0..=width` and `0..=height`) and validates the partition. Rectangles
    /// are kept sorted by id.
    pub fn new(rects: Vec<Rect>) -> Result<Rectangulation, RectError> {
        if rects.is_empty() {
            return Err(RectError::Empty);
        }
        for r in &rects {
            if r.x_lo >= r.x_hi || r.y_lo >= r.y_hi {
                return Err(RectError::EmptySpan { id: r.id });
            }
        }

        let mut xs: Vec<i64> = rects.iter().flat_map(|r| [r.x_lo, r.x_hi]).collect();
        let mut ys: Vec<i64> = rects.iter().flat_map(|r| [r.y_lo, r.y_hi]).collect();
        xs.sort_unstable();
        xs.dedup();
        ys.sort_unstable();
        ys.dedup();
        let xpos = |v: i64| xs.binary_search(&v).unwrap() as i64;
        let ypos = |v: i64| ys.binary_search(&v).unwrap() as i64;

        let mut rects: Vec<Rect> = rects
            .iter()
            .map(|r| Rect {
                id: r.id,
                x_lo: xpos(r.x_lo),
                x_hi: xpos(r.x_hi),
                y_lo: ypos(r.y_lo),
                y_hi: ypos(r.y_hi),
            })
            .collect();
        rects.sort_by_key(|r| r.id);
        for pair in rects.windows(2) {
            if pair[0].id == pair[1].id {
                return Err(RectError::DuplicateId { id: pair[0].id });
            }
        }

        let width = xs.len() as i64 - 1;
        let height = ys.len() as i64 - 1;

        // each unit cell of the compacted grid must lie in exactly one
        // rectangle; this catches overlaps and gaps at once
        let mut cover = alloc::vec![0usize; (width * height) as usize];
        for r in &rects {
            for x in r.x_lo..r.x_hi {
                for y in r.y_lo..r.y_hi {
                    cover[(x * height + y) as usize] += 1;
                }
            }
        }
        for x in 0..width {
            for y in 0..height {
                let count = cover[(x * height + y) as usize];
                if count != 1 {
                    return Err(RectError::CoverageMismatch { x, y, count });
                }
            }
        }

        // a crossing junction is an interior point where four corners meet
        for x in 1..width {
            for y in 1..height {
                let corners = rects
                    .iter()
                    .filter(|r| {
                        (r.x_lo == x || r.x_hi == x) && (r.y_lo == y || r.y_hi == y)
                    })
                    .count();
                if corners == 4 {
                    return Err(RectError::CrossJunction { x, y });
                }
            }
        }

        Ok(Rectangulation {
            rects,
            width,
            height,
        })
    }

    /// Rectangles sorted by id.
    pub fn rects(&self) -> &[Rect] {
        &self.rects
    }

    /// Number of rectangles, at least 1 by construction.
    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn width(&self) -> i64 {
        self.width
    }

    pub fn height(&self) -> i64 {
        self.height
    }
}
