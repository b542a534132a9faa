//! Staircase frontier shared by the pavement builder and its inverse.
//!
//! During construction the placed rectangles always form a staircase-shaped
//! region attached to the left and bottom walls. The frontier is the monotone
//! lattice path separating that region from the rest of the bounding box. It
//! runs from the top-left corner of the box to the bottom-right corner and
//! alternates between vertical edges (walked downward) and horizontal edges
//! (walked rightward).
//!
//! A slot is a concave corner of the path: a vertical edge followed by a
//! horizontal one. Slots are numbered from the bottom-right end of the path,
//! so slot 0 is the last concave corner and indices grow toward the
//! top-left. Every placement covers the corner of one slot and replaces the
//! two incident edges; collinear neighbours are merged so the path stays
//! strictly alternating.
//!
//! The coordinate type is generic: the builder works with abstract cut ids
//! (ordered by an external table, compared only for equality here) while the
//! inverse works with concrete integer coordinates.

use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Edge<T> {
    /// Vertical edge at `x`, walked from `y_top` down to `y_bot`.
    V { x: T, y_top: T, y_bot: T },
    /// Horizontal edge at `y`, walked from `x_lo` right to `x_hi`.
    H { y: T, x_lo: T, x_hi: T },
}

/// Axis-aligned span of a placed rectangle, in frontier coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Span<T> {
    pub x_lo: T,
    pub x_hi: T,
    pub y_lo: T,
    pub y_hi: T,
}

#[derive(Debug, Clone)]
pub(crate) struct Frontier<T> {
    path: Vec<Edge<T>>,
    x_lo: T,
    x_hi: T,
    y_lo: T,
    y_hi: T,
}

impl<T: Copy + Eq> Frontier<T> {
    /// Empty staircase over the box `[x_lo, x_hi] x [y_lo, y_hi]`: the path
    /// is the left wall followed by the bottom wall, a single slot.
    pub(crate) fn new(x_lo: T, x_hi: T, y_lo: T, y_hi: T) -> Frontier<T> {
        let mut path = Vec::with_capacity(8);
        path.push(Edge::V {
            x: x_lo,
            y_top: y_hi,
            y_bot: y_lo,
        });
        path.push(Edge::H {
            y: y_lo,
            x_lo,
            x_hi,
        });
        Frontier {
            path,
            x_lo,
            x_hi,
            y_lo,
            y_hi,
        }
    }

    fn pair_positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.path.len().saturating_sub(1))
            .filter(|&i| matches!(self.path[i], Edge::V { .. }) && matches!(self.path[i + 1], Edge::H { .. }))
    }

    pub(crate) fn slot_count(&self) -> usize {
        self.pair_positions().count()
    }

    /// Path position of the vertical edge of the given slot. Slot 0 is the
    /// concave corner nearest the bottom-right end of the path.
    fn slot_position(&self, slot: usize) -> usize {
        let pairs: Vec<usize> = self.pair_positions().collect();
        pairs[pairs.len() - 1 - slot]
    }

    /// The two edges meeting at the slot's corner, as `(vertical, horizontal)`
    /// spans `((x, y_top, y_bot), (y, x_lo, x_hi))`.
    pub(crate) fn slot_edges(&self, slot: usize) -> ((T, T, T), (T, T, T)) {
        let i = self.slot_position(slot);
        let (Edge::V { x, y_top, y_bot }, Edge::H { y, x_lo, x_hi }) = (self.path[i], self.path[i + 1])
        else {
            unreachable!()
        };
        ((x, y_top, y_bot), (y, x_lo, x_hi))
    }

    fn set_prev_x_hi(&mut self, i: usize, x_hi: T) {
        let Edge::H { x_hi: end, .. } = &mut self.path[i - 1] else {
            unreachable!()
        };
        *end = x_hi;
    }

    fn set_next_y_top(&mut self, i: usize, y_top: T) {
        let Edge::V { y_top: top, .. } = &mut self.path[i + 2] else {
            unreachable!()
        };
        *top = y_top;
    }

    /// Cover both slot edges exactly. Removes the concave corner; the new top
    /// and right sides of the rectangle merge into the neighbouring edges.
    pub(crate) fn place_w(&mut self, slot: usize) -> Span<T> {
        let i = self.slot_position(slot);
        let ((vx, vy_top, _), (hy, _, hx_hi)) = self.slot_edges(slot);
        let has_prev = i > 0;
        let has_next = i + 2 < self.path.len();
        if has_prev {
            self.set_prev_x_hi(i, hx_hi);
        }
        if has_next {
            self.set_next_y_top(i, vy_top);
        }
        let mut repl: Vec<Edge<T>> = Vec::new();
        if !has_prev {
            repl.push(Edge::H {
                y: vy_top,
                x_lo: vx,
                x_hi: hx_hi,
            });
        }
        if !has_next {
            repl.push(Edge::V {
                x: hx_hi,
                y_top: vy_top,
                y_bot: hy,
            });
        }
        self.path.splice(i..i + 2, repl);
        Span {
            x_lo: vx,
            x_hi: hx_hi,
            y_lo: hy,
            y_hi: vy_top,
        }
    }

    /// Cover the vertical edge exactly and the part of the horizontal edge
    /// left of `mx`. The slot moves to the rectangle's bottom-right corner.
    pub(crate) fn place_r(&mut self, slot: usize, mx: T) -> Span<T> {
        let i = self.slot_position(slot);
        let ((vx, vy_top, _), (hy, _, hx_hi)) = self.slot_edges(slot);
        let has_prev = i > 0;
        if has_prev {
            self.set_prev_x_hi(i, mx);
        }
        let mut repl: Vec<Edge<T>> = Vec::new();
        if !has_prev {
            repl.push(Edge::H {
                y: vy_top,
                x_lo: vx,
                x_hi: mx,
            });
        }
        repl.push(Edge::V {
            x: mx,
            y_top: vy_top,
            y_bot: hy,
        });
        repl.push(Edge::H {
            y: hy,
            x_lo: mx,
            x_hi: hx_hi,
        });
        self.path.splice(i..i + 2, repl);
        Span {
            x_lo: vx,
            x_hi: mx,
            y_lo: hy,
            y_hi: vy_top,
        }
    }

    /// Cover the horizontal edge exactly and the part of the vertical edge
    /// below `my`. The slot moves to the rectangle's top-left corner.
    pub(crate) fn place_g(&mut self, slot: usize, my: T) -> Span<T> {
        let i = self.slot_position(slot);
        let ((vx, vy_top, _), (hy, _, hx_hi)) = self.slot_edges(slot);
        let has_next = i + 2 < self.path.len();
        if has_next {
            self.set_next_y_top(i, my);
        }
        let mut repl: Vec<Edge<T>> = Vec::new();
        repl.push(Edge::V {
            x: vx,
            y_top: vy_top,
            y_bot: my,
        });
        repl.push(Edge::H {
            y: my,
            x_lo: vx,
            x_hi: hx_hi,
        });
        if !has_next {
            repl.push(Edge::V {
                x: hx_hi,
                y_top: my,
                y_bot: hy,
            });
        }
        self.path.splice(i..i + 2, repl);
        Span {
            x_lo: vx,
            x_hi: hx_hi,
            y_lo: hy,
            y_hi: my,
        }
    }

    /// Cover a proper part of both edges: the vertical one below `my`, the
    /// horizontal one left of `mx`. The corner splits into two slots.
    pub(crate) fn place_b(&mut self, slot: usize, mx: T, my: T) -> Span<T> {
        let i = self.slot_position(slot);
        let ((vx, vy_top, _), (hy, _, hx_hi)) = self.slot_edges(slot);
        let repl = [
            Edge::V {
                x: vx,
                y_top: vy_top,
                y_bot: my,
            },
            Edge::H {
                y: my,
                x_lo: vx,
                x_hi: mx,
            },
            Edge::V {
                x: mx,
                y_top: my,
                y_bot: hy,
            },
            Edge::H {
                y: hy,
                x_lo: mx,
                x_hi: hx_hi,
            },
        ];
        self.path.splice(i..i + 2, repl);
        Span {
            x_lo: vx,
            x_hi: mx,
            y_lo: hy,
            y_hi: my,
        }
    }

    /// True once the staircase fills the whole box: the path has collapsed to
    /// the top wall followed by the right wall.
    pub(crate) fn is_complete(&self) -> bool {
        self.path.len() == 2
            && self.path[0]
                == Edge::H {
                    y: self.y_hi,
                    x_lo: self.x_lo,
                    x_hi: self.x_hi,
                }
            && self.path[1]
                == Edge::V {
                    x: self.x_hi,
                    y_top: self.y_hi,
                    y_bot: self.y_lo,
                }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_path_has_one_slot() {
        let f = Frontier::new(0i64, 10, 0, 10);
        assert_eq!(f.slot_count(), 1);
        assert_eq!(f.slot_edges(0), ((0, 10, 0), (0, 0, 10)));
        assert!(!f.is_complete());
    }

    #[test]
    fn single_w_completes_the_box() {
        let mut f = Frontier::new(0i64, 10, 0, 10);
        let span = f.place_w(0);
        assert_eq!(
            span,
            Span {
                x_lo: 0,
                x_hi: 10,
                y_lo: 0,
                y_hi: 10
            }
        );
        assert_eq!(f.slot_count(), 0);
        assert!(f.is_complete());
    }

    #[test]
    fn b_splits_a_slot_into_two() {
        let mut f = Frontier::new(0i64, 10, 0, 10);
        let span = f.place_b(0, 4, 6);
        assert_eq!(
            span,
            Span {
                x_lo: 0,
                x_hi: 4,
                y_lo: 0,
                y_hi: 6
            }
        );
        assert_eq!(f.slot_count(), 2);
        // slot 0 sits at the rectangle's bottom-right corner, slot 1 at its
        // top-left corner
        assert_eq!(f.slot_edges(0), ((4, 6, 0), (0, 4, 10)));
        assert_eq!(f.slot_edges(1), ((0, 10, 6), (6, 0, 4)));
    }

    #[test]
    fn r_and_g_keep_the_slot_count() {
        let mut f = Frontier::new(0i64, 10, 0, 10);
        f.place_r(0, 3);
        assert_eq!(f.slot_count(), 1);
        assert_eq!(f.slot_edges(0), ((3, 10, 0), (0, 3, 10)));

        let mut g = Frontier::new(0i64, 10, 0, 10);
        g.place_g(0, 5);
        assert_eq!(g.slot_count(), 1);
        assert_eq!(g.slot_edges(0), ((0, 10, 5), (5, 0, 10)));
    }

    #[test]
    fn w_merges_neighbouring_edges() {
        let mut f = Frontier::new(0i64, 10, 0, 10);
        f.place_b(0, 4, 6);
        // fill the bottom-right slot exactly: it covers x in [4, 10], y in
        // [0, 6], and the new top side must merge with the step at y = 6
        let span = f.place_w(0);
        assert_eq!(
            span,
            Span {
                x_lo: 4,
                x_hi: 10,
                y_lo: 0,
                y_hi: 6
            }
        );
        assert_eq!(f.slot_count(), 1);
        assert_eq!(f.slot_edges(0), ((0, 10, 6), (6, 0, 10)));
        // then one more w fills the remaining top band
        f.place_w(0);
        assert!(f.is_complete());
    }
}
