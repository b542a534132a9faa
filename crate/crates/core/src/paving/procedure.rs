//! Rectangulation back to its excursion.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Bound::Excluded;

use crate::walk::{leftmost_lower_bound, Color, Vertex, Walk};

use super::frontier::Frontier;
use super::{Rect, Rectangulation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProcedureError {
    /// No placement order rebuilds the rectangulation with a leftmost walk.
    NoValidOrder,
    /// More than one leftmost walk rebuilds it; the correspondence would not
    /// be invertible.
    Ambiguous,
}

impl fmt::Display for ProcedureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ProcedureError::NoValidOrder => {
                write!(f, "no placement order rebuilds this rectangulation")
            }
            ProcedureError::Ambiguous => {
                write!(f, "more than one leftmost walk rebuilds this rectangulation")
            }
        }
    }
}

/// Recovers the unique excursion `e` whose pavement is the given
/// rectangulation, up to strong equivalence.
///
/// The staircase is replayed against the actual rectangles: at each step a
/// rectangle anchored at some slot corner is chosen, its colour read off from
/// how much of the two slot edges it covers, and the leftmost condition
/// checked against the previous vertex. A placement that splits an edge must
/// also put the new side next to the far end of that edge among the sides
/// already present, the position a pavement gives every fresh cut; an order
/// that breaks this cannot be a paving order, however the rectangles fit.
/// Exactly one complete replay must survive.
pub fn procedure(r: &Rectangulation) -> Result<Walk, ProcedureError> {
    let rects = r.rects();
    let mut by_corner: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for (i, rect) in rects.iter().enumerate() {
        // bottom-left corners are distinct in a partition
        by_corner.insert((rect.x_lo, rect.y_lo), i);
    }

    let mut search = Search {
        rects,
        by_corner,
        present_x: SideCounts::new(0, r.width()),
        present_y: SideCounts::new(0, r.height()),
        found: Vec::new(),
    };
    let f: Frontier<i64> = Frontier::new(0, r.width(), 0, r.height());
    let mut placed = alloc::vec![false; rects.len()];
    let mut walk = Vec::with_capacity(rects.len());
    search.run(&f, &mut placed, 0, &mut walk);

    match search.found.len() {
        0 => Err(ProcedureError::NoValidOrder),
        1 => Ok(Walk::new(search.found.pop().unwrap())),
        _ => Err(ProcedureError::Ambiguous),
    }
}

/// Multiset of the side coordinates placed so far along one axis.
struct SideCounts {
    counts: BTreeMap<i64, u32>,
}

impl SideCounts {
    fn new(low_wall: i64, high_wall: i64) -> SideCounts {
        let mut counts = BTreeMap::new();
        counts.insert(low_wall, 1);
        counts.insert(high_wall, 1);
        SideCounts { counts }
    }

    fn add(&mut self, v: i64) {
        *self.counts.entry(v).or_insert(0) += 1;
    }

    fn remove(&mut self, v: i64) {
        let c = self.counts.get_mut(&v).unwrap();
        *c -= 1;
        if *c == 0 {
            self.counts.remove(&v);
        }
    }

    fn none_between(&self, lo: i64, hi: i64) -> bool {
        self.counts.range((Excluded(lo), Excluded(hi))).next().is_none()
    }
}

struct Search<'a> {
    rects: &'a [Rect],
    by_corner: BTreeMap<(i64, i64), usize>,
    present_x: SideCounts,
    present_y: SideCounts,
    found: Vec<Vec<Vertex>>,
}

impl Search<'_> {
    fn run(
        &mut self,
        f: &Frontier<i64>,
        placed: &mut Vec<bool>,
        placed_count: usize,
        walk: &mut Vec<Vertex>,
    ) {
        if self.found.len() >= 2 {
            return;
        }
        if placed_count == self.rects.len() {
            if f.is_complete() {
                self.found.push(walk.clone());
            }
            return;
        }
        let slots = f.slot_count();
        for slot in 0..slots {
            let ((vx, vy_top, _), (hy, _, hx_hi)) = f.slot_edges(slot);
            let Some(&ri) = self.by_corner.get(&(vx, hy)) else {
                continue;
            };
            if placed[ri] {
                continue;
            }
            let rect = self.rects[ri];
            if rect.x_hi > hx_hi || rect.y_hi > vy_top {
                continue;
            }
            let c = match (rect.x_hi == hx_hi, rect.y_hi == vy_top) {
                (true, true) => Color::W,
                (true, false) => Color::G,
                (false, true) => Color::R,
                (false, false) => Color::B,
            };
            // a side that splits its edge must be the last one before the far
            // end; sides placed later may fall in between, earlier ones not
            if rect.x_hi < hx_hi && !self.present_x.none_between(rect.x_hi, hx_hi) {
                continue;
            }
            if rect.y_hi < vy_top && !self.present_y.none_between(rect.y_hi, vy_top) {
                continue;
            }
            if let Some(&prev) = walk.last() {
                if (slot as i32) < leftmost_lower_bound(prev.x, prev.c, c) {
                    continue;
                }
            }
            let mut next = f.clone();
            match c {
                Color::W => next.place_w(slot),
                Color::G => next.place_g(slot, rect.y_hi),
                Color::R => next.place_r(slot, rect.x_hi),
                Color::B => next.place_b(slot, rect.x_hi, rect.y_hi),
            };
            placed[ri] = true;
            self.present_x.add(rect.x_lo);
            self.present_x.add(rect.x_hi);
            self.present_y.add(rect.y_lo);
            self.present_y.add(rect.y_hi);
            walk.push(Vertex::new(slots as i32 - 1, slot as i32, c));
            self.run(&next, placed, placed_count + 1, walk);
            walk.pop();
            self.present_x.remove(rect.x_lo);
            self.present_x.remove(rect.x_hi);
            self.present_y.remove(rect.y_lo);
            self.present_y.remove(rect.y_hi);
            placed[ri] = false;
        }
    }
}
