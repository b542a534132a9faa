//! Completing a pattern to a rectangulation that contains it.

use alloc::vec::Vec;
use core::fmt;

use super::{config_contains, seg, End, GeomPattern, Orientation, Segment, SegmentConfig};
use crate::paving::{Rect, Rectangulation};

/// How many endpoint orders to try before giving up.
const FALLBACK_LIMIT: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompleteError;

impl fmt::Display for CompleteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no extension of the pattern closes into a rectangulation")
    }
}

/// Extends the pattern's segments into a small rectangulation containing
/// it, with exactly the pattern's segments as its interior segments.
///
/// The pattern is drawn inside a box one unit larger than its bounding
/// box, then every free endpoint grows, in increasing (segment id, end)
/// order, until it meets the box or the interior of a perpendicular
/// segment as extended so far. If the faces of the result are not all
/// rectangles, or the certified postconditions fail, other endpoint orders
/// are tried up to a fixed bound before reporting failure. Patterns whose
/// drawn coordinates force collinear collisions, like two segments on a
/// common axis, fail even when some rearrangement of the plane would
/// complete them.
pub fn complete_pattern(p: &GeomPattern) -> Result<Rectangulation, CompleteError> {
    if p.size() == 0 {
        let unit = Rect {
            id: 1,
            x_lo: 0,
            x_hi: 1,
            y_lo: 0,
            y_hi: 1,
        };
        return Ok(Rectangulation::new(alloc::vec![unit]).unwrap());
    }

    let base = compressed(p.config());
    let mut order: Vec<(usize, End)> = (0..base.0.len())
        .flat_map(|i| [(i, End::Lo), (i, End::Hi)])
        .collect();
    for _ in 0..FALLBACK_LIMIT {
        if let Some(r) = try_order(p, &base, &order) {
            return Ok(r);
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    Err(CompleteError)
}

/// The pattern's segments with each axis squeezed to consecutive ranks,
/// so the face grid stays small whatever coordinates the pattern uses.
/// Returns the segments together with the exclusive wall ranks.
fn compressed(c: &SegmentConfig) -> (Vec<Segment>, i64, i64) {
    let mut xs: Vec<i64> = Vec::new();
    let mut ys: Vec<i64> = Vec::new();
    for s in c.segments() {
        match s.orientation {
            Orientation::Horizontal => {
                ys.push(s.axis);
                xs.push(s.lo);
                xs.push(s.hi);
            }
            Orientation::Vertical => {
                xs.push(s.axis);
                ys.push(s.lo);
                ys.push(s.hi);
            }
        }
    }
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();
    let rank = |table: &[i64], v: i64| table.binary_search(&v).unwrap() as i64;
    let segs = c
        .segments()
        .iter()
        .map(|s| {
            let (axes, spans) = match s.orientation {
                Orientation::Horizontal => (&ys, &xs),
                Orientation::Vertical => (&xs, &ys),
            };
            Segment {
                id: s.id,
                orientation: s.orientation,
                axis: rank(axes, s.axis),
                lo: rank(spans, s.lo),
                hi: rank(spans, s.hi),
            }
        })
        .collect();
    (segs, xs.len() as i64, ys.len() as i64)
}

fn try_order(
    p: &GeomPattern,
    base: &(Vec<Segment>, i64, i64),
    order: &[(usize, End)],
) -> Option<Rectangulation> {
    let (segments, x_wall, y_wall) = base;
    let mut segs = segments.clone();
    for &(i, end) in order {
        extend_endpoint(&mut segs, i, end, *x_wall, *y_wall);
    }
    SegmentConfig::new(segs.clone()).ok()?;
    let r = faces(&segs, *x_wall, *y_wall)?;
    let derived = seg(&r);
    if derived.len() != p.size() || !config_contains(&derived, p.config(), false) {
        return None;
    }
    Some(r)
}

/// Grows one endpoint until the box wall or the first perpendicular
/// segment whose current span strictly contains the moving coordinate.
/// An endpoint already resting inside a perpendicular segment stays put.
fn extend_endpoint(segs: &mut [Segment], i: usize, end: End, x_wall: i64, y_wall: i64) {
    let s = segs[i];
    let (px, py) = s.endpoint(end);
    let resting = segs.iter().enumerate().any(|(j, t)| {
        j != i
            && t.orientation != s.orientation
            && match t.orientation {
                Orientation::Horizontal => t.axis == py && t.lo < px && px < t.hi,
                Orientation::Vertical => t.axis == px && t.lo < py && py < t.hi,
            }
    });
    if resting {
        return;
    }
    let blockers = segs
        .iter()
        .enumerate()
        .filter(|&(j, t)| j != i && t.orientation != s.orientation)
        .filter(|&(_, t)| t.lo < s.axis && s.axis < t.hi)
        .map(|(_, t)| t.axis);
    let target = match (s.orientation, end) {
        (Orientation::Vertical, End::Hi) => blockers.filter(|&a| a > s.hi).min().unwrap_or(y_wall),
        (Orientation::Vertical, End::Lo) => blockers.filter(|&a| a < s.lo).max().unwrap_or(-1),
        (Orientation::Horizontal, End::Hi) => {
            blockers.filter(|&a| a > s.hi).min().unwrap_or(x_wall)
        }
        (Orientation::Horizontal, End::Lo) => blockers.filter(|&a| a < s.lo).max().unwrap_or(-1),
    };
    match end {
        End::Lo => segs[i].lo = target,
        End::Hi => segs[i].hi = target,
    }
}

/// Reads the rectangular faces cut out by the segments inside the box
/// spanning ranks -1 to the walls. Returns `None` if some face is not a
/// rectangle.
fn faces(segs: &[Segment], x_wall: i64, y_wall: i64) -> Option<Rectangulation> {
    let vwall = |x: i64, cy: i64| {
        segs.iter().any(|s| {
            s.orientation == Orientation::Vertical && s.axis == x && s.lo <= cy && cy < s.hi
        })
    };
    let hwall = |y: i64, cx: i64| {
        segs.iter().any(|s| {
            s.orientation == Orientation::Horizontal && s.axis == y && s.lo <= cx && cx < s.hi
        })
    };

    let width = (x_wall + 1) as usize;
    let height = (y_wall + 1) as usize;
    let cell = |cx: i64, cy: i64| (cy + 1) as usize * width + (cx + 1) as usize;
    let mut component = alloc::vec![usize::MAX; width * height];
    let mut rects: Vec<Rect> = Vec::new();
    for start_y in -1..y_wall {
        for start_x in -1..x_wall {
            if component[cell(start_x, start_y)] != usize::MAX {
                continue;
            }
            let id = rects.len() + 1;
            let mut queue = alloc::vec![(start_x, start_y)];
            component[cell(start_x, start_y)] = id;
            let (mut x_lo, mut x_hi, mut y_lo, mut y_hi) = (start_x, start_x, start_y, start_y);
            let mut count = 0i64;
            while let Some((cx, cy)) = queue.pop() {
                count += 1;
                x_lo = x_lo.min(cx);
                x_hi = x_hi.max(cx);
                y_lo = y_lo.min(cy);
                y_hi = y_hi.max(cy);
                let steps = [
                    (cx + 1, cy, cx + 1 < x_wall && !vwall(cx + 1, cy)),
                    (cx - 1, cy, cx - 1 >= -1 && !vwall(cx, cy)),
                    (cx, cy + 1, cy + 1 < y_wall && !hwall(cy + 1, cx)),
                    (cx, cy - 1, cy - 1 >= -1 && !hwall(cy, cx)),
                ];
                for (nx, ny, open) in steps {
                    if open && component[cell(nx, ny)] == usize::MAX {
                        component[cell(nx, ny)] = id;
                        queue.push((nx, ny));
                    }
                }
            }
            if count != (x_hi - x_lo + 1) * (y_hi - y_lo + 1) {
                return None;
            }
            rects.push(Rect {
                id,
                x_lo,
                x_hi: x_hi + 1,
                y_lo,
                y_hi: y_hi + 1,
            });
        }
    }
    Rectangulation::new(rects).ok()
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::super::{contains_pattern, GeomPattern};
    use super::*;

    fn pattern(segments: Vec<Segment>) -> GeomPattern {
        GeomPattern::new(SegmentConfig::new(segments).unwrap())
    }

    #[test]
    fn the_empty_pattern_completes_to_a_single_rectangle() {
        let r = complete_pattern(&GeomPattern::empty()).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(seg(&r).len(), 0);
    }

    #[test]
    fn a_t_shape_completes_to_three_rectangles() {
        let top = pattern(alloc::vec![
            Segment::horizontal(0, 2, 0, 2),
            Segment::vertical(1, 1, 0, 2),
        ]);
        let r = complete_pattern(&top).unwrap();
        assert_eq!(r.len(), top.size() + 1);
        assert_eq!(seg(&r).len(), top.size());
        assert!(contains_pattern(&r, &top));
        // the horizontal spans the full width, the vertical hangs below it
        let s = seg(&r);
        let h = s
            .segments()
            .iter()
            .find(|s| s.orientation == Orientation::Horizontal)
            .unwrap();
        assert_eq!((h.lo, h.hi), (0, r.width()));
    }

    #[test]
    fn a_single_segment_completes_to_a_two_rect_split() {
        let v = pattern(alloc::vec![Segment::vertical(0, 7, -4, 12)]);
        let r = complete_pattern(&v).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r.width(), 2);
        assert_eq!(r.height(), 1);
    }

    #[test]
    fn completion_grows_ends_that_rest_on_walls_and_keeps_resting_ones() {
        // a vertical resting on a horizontal from above, plus a second
        // horizontal to the right that the first must not swallow
        let p = pattern(alloc::vec![
            Segment::horizontal(0, 1, 0, 3),
            Segment::vertical(1, 1, 1, 4),
            Segment::horizontal(2, 3, 2, 5),
        ]);
        let r = complete_pattern(&p).unwrap();
        assert_eq!(r.len(), p.size() + 1);
        assert_eq!(seg(&r).len(), p.size());
        assert!(contains_pattern(&r, &p));
    }

    #[test]
    fn collinear_segments_on_one_axis_cannot_complete() {
        let p = pattern(alloc::vec![
            Segment::vertical(0, 0, 0, 2),
            Segment::vertical(1, 0, 3, 5),
        ]);
        assert_eq!(complete_pattern(&p), Err(CompleteError));
    }

    #[test]
    fn permutations_step_through_every_order() {
        let mut v = alloc::vec![0, 1, 2];
        let mut seen = alloc::vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(v, alloc::vec![2, 1, 0]);
    }
}
