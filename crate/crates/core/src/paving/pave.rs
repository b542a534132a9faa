//! Excursion to rectangulation.

use alloc::vec::Vec;
use core::fmt;

use crate::walk::{Color, Walk};

use super::frontier::{Frontier, Span};
use super::{Rect, RectError, Rectangulation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaveError {
    NotExcursion,
    /// The placements did not form a valid partition. This cannot happen for
    /// an excursion; the reason is kept instead of panicking.
    Inconsistent(RectError),
}

impl fmt::Display for PaveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PaveError::NotExcursion => write!(f, "walk is not an excursion"),
            PaveError::Inconsistent(e) => write!(f, "placements are inconsistent: {e}"),
        }
    }
}

/// Total order of cut ids along one axis. Ids are allocation indices, never
/// reused; `order` lists them by increasing coordinate. A fresh cut goes
/// immediately before the far end of the edge being split, past any cut an
/// earlier merge buried inside that edge. Splitting the same edge twice
/// therefore nests from the far end, and two placements separated by a merge
/// end up on opposite sides of the buried cut, which is what keeps distinct
/// excursions from producing the same rectangulation.
struct CutOrder {
    order: Vec<usize>,
    next: usize,
}

impl CutOrder {
    /// Starts with the two walls, ids 0 (low) and 1 (high).
    fn new() -> CutOrder {
        CutOrder {
            order: alloc::vec![0, 1],
            next: 2,
        }
    }

    fn insert_before(&mut self, id: usize) -> usize {
        let pos = self.position(id);
        let fresh = self.next;
        self.next += 1;
        self.order.insert(pos, fresh);
        fresh
    }

    fn position(&self, id: usize) -> usize {
        self.order.iter().position(|&c| c == id).unwrap()
    }
}

/// A pavement together with the slot count of the frontier after each
/// placement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaveSteps {
    pub rectangulation: Rectangulation,
    /// `slot_counts[m]` is the number of slots after placing rectangle
    /// `m + 1`; the count before the first placement is always 1.
    pub slot_counts: Vec<usize>,
}

/// Builds the rectangulation of an excursion.
pub fn pave(e: &Walk) -> Result<Rectangulation, PaveError> {
    pave_steps(e).map(|s| s.rectangulation)
}

/// Like [`pave`], additionally reporting how the slot count evolved.
pub fn pave_steps(e: &Walk) -> Result<PaveSteps, PaveError> {
    if !e.is_excursion() {
        return Err(PaveError::NotExcursion);
    }

    let mut xcuts = CutOrder::new();
    let mut ycuts = CutOrder::new();
    let mut f: Frontier<usize> = Frontier::new(0, 1, 0, 1);
    let mut spans: Vec<Span<usize>> = Vec::with_capacity(e.len());
    let mut slot_counts: Vec<usize> = Vec::with_capacity(e.len());

    for v in e.vertices() {
        let slot = v.x as usize;
        assert!(
            slot < f.slot_count(),
            "slot {slot} out of range for a frontier with {} slots",
            f.slot_count()
        );
        let ((_, vy_top, _), (_, _, hx_hi)) = f.slot_edges(slot);
        let span = match v.c {
            Color::W => f.place_w(slot),
            Color::R => {
                let mx = xcuts.insert_before(hx_hi);
                f.place_r(slot, mx)
            }
            Color::G => {
                let my = ycuts.insert_before(vy_top);
                f.place_g(slot, my)
            }
            Color::B => {
                let mx = xcuts.insert_before(hx_hi);
                let my = ycuts.insert_before(vy_top);
                f.place_b(slot, mx, my)
            }
        };
        spans.push(span);
        slot_counts.push(f.slot_count());
    }
    assert!(f.is_complete(), "frontier left incomplete by an excursion");

    let rects: Vec<Rect> = spans
        .iter()
        .enumerate()
        .map(|(m, s)| Rect {
            id: m + 1,
            x_lo: xcuts.position(s.x_lo) as i64,
            x_hi: xcuts.position(s.x_hi) as i64,
            y_lo: ycuts.position(s.y_lo) as i64,
            y_hi: ycuts.position(s.y_hi) as i64,
        })
        .collect();
    let rectangulation = Rectangulation::new(rects).map_err(PaveError::Inconsistent)?;
    Ok(PaveSteps {
        rectangulation,
        slot_counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walk::WalkClass;

    fn walk(text: &str) -> Walk {
        text.parse().unwrap()
    }

    fn rect(id: usize, x_lo: i64, x_hi: i64, y_lo: i64, y_hi: i64) -> Rect {
        Rect {
            id,
            x_lo,
            x_hi,
            y_lo,
            y_hi,
        }
    }

    #[test]
    fn single_vertex_excursion_fills_the_box() {
        let r = pave(&walk("0,0,w")).unwrap();
        assert_eq!(r.rects(), &[rect(1, 0, 1, 0, 1)]);
    }

    #[test]
    fn red_then_white_slices_vertically() {
        let r = pave(&walk("0,0,r;0,0,w")).unwrap();
        assert_eq!(r.width(), 2);
        assert_eq!(r.height(), 1);
        assert_eq!(r.rects(), &[rect(1, 0, 1, 0, 1), rect(2, 1, 2, 0, 1)]);
    }

    #[test]
    fn green_then_white_slices_horizontally() {
        let r = pave(&walk("0,0,g;0,0,w")).unwrap();
        assert_eq!(r.width(), 1);
        assert_eq!(r.height(), 2);
        assert_eq!(r.rects(), &[rect(1, 0, 1, 0, 1), rect(2, 0, 1, 1, 2)]);
    }

    #[test]
    fn red_chains_make_left_to_right_strips() {
        let r = pave(&walk("0,0,r;0,0,r;0,0,w")).unwrap();
        assert_eq!(r.width(), 3);
        assert_eq!(r.height(), 1);
        assert_eq!(
            r.rects(),
            &[rect(1, 0, 1, 0, 1), rect(2, 1, 2, 0, 1), rect(3, 2, 3, 0, 1)]
        );
    }

    #[test]
    fn green_chains_make_bottom_to_top_strips() {
        let r = pave(&walk("0,0,g;0,0,g;0,0,w")).unwrap();
        assert_eq!(r.width(), 1);
        assert_eq!(r.height(), 3);
        assert_eq!(
            r.rects(),
            &[rect(1, 0, 1, 0, 1), rect(2, 0, 1, 1, 2), rect(3, 0, 1, 2, 3)]
        );
    }

    #[test]
    fn blue_opens_a_corner_that_two_whites_close() {
        // the b rectangle sits at the bottom left, the first w fills the
        // strip to its right (slot 0 is the bottom-right corner), the second
        // w the full-width band on top
        let r = pave(&walk("0,0,b;1,0,w;0,0,w")).unwrap();
        assert_eq!(
            r.rects(),
            &[rect(1, 0, 1, 0, 1), rect(2, 1, 2, 0, 1), rect(3, 0, 2, 1, 2)]
        );
    }

    #[test]
    fn buried_cuts_separate_orders_that_commute_geometrically() {
        // both walks start with b and place one rectangle at each of the two
        // opened corners; the merge in the middle of the second walk buries
        // the b cut inside the top edge, so its r cut lands right of it
        let t = pave(&walk("0,0,b;1,1,r;1,0,w;0,0,w")).unwrap();
        assert_eq!(
            t.rects(),
            &[
                rect(1, 0, 2, 0, 1),
                rect(2, 0, 1, 1, 2),
                rect(3, 2, 3, 0, 1),
                rect(4, 1, 3, 1, 2),
            ]
        );
        let m = pave(&walk("0,0,b;1,0,w;0,0,r;0,0,w")).unwrap();
        assert_eq!(
            m.rects(),
            &[
                rect(1, 0, 1, 0, 1),
                rect(2, 1, 3, 0, 1),
                rect(3, 0, 2, 1, 2),
                rect(4, 2, 3, 1, 2),
            ]
        );
    }

    #[test]
    fn seven_step_excursion_paves_to_the_expected_partition() {
        let r = pave(&walk("0,0,b;1,0,g;1,1,r;1,0,r;1,1,r;1,0,w;0,0,w")).unwrap();
        assert_eq!(r.width(), 5);
        assert_eq!(r.height(), 3);
        assert_eq!(
            r.rects(),
            &[
                rect(1, 0, 2, 0, 2),
                rect(2, 2, 5, 0, 1),
                rect(3, 0, 1, 2, 3),
                rect(4, 2, 4, 1, 2),
                rect(5, 1, 3, 2, 3),
                rect(6, 4, 5, 1, 2),
                rect(7, 3, 5, 2, 3),
            ]
        );
    }

    #[test]
    fn slot_counts_track_heights_plus_one() {
        let e = walk("0,0,b;1,0,g;1,1,r;1,0,r;1,1,r;1,0,w;0,0,w");
        let steps = pave_steps(&e).unwrap();
        let expect: Vec<usize> = (1..e.len())
            .map(|m| e.get(m).unwrap().h as usize + 1)
            .chain([0])
            .collect();
        assert_eq!(steps.slot_counts, expect);
    }

    #[test]
    fn non_excursions_are_rejected() {
        assert_eq!(pave(&Walk::empty()), Err(PaveError::NotExcursion));
        assert_eq!(pave(&walk("0,0,r")), Err(PaveError::NotExcursion));
        assert_eq!(pave(&walk("0,0,b;1,1,w")), Err(PaveError::NotExcursion));
    }

    #[test]
    fn every_short_excursion_paves_to_a_valid_partition() {
        for n in 1..=5 {
            for e in crate::walk::enumerate(n, WalkClass::Lhqe) {
                let r = pave(&e).unwrap();
                assert_eq!(r.len(), n);
            }
        }
    }
}
