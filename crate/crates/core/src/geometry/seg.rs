//! Maximal interior segments of a rectangulation.

use alloc::vec::Vec;

use super::{Segment, SegmentConfig};
use crate::paving::Rectangulation;

/// The configuration of maximal interior segments: maximal straight unions
/// of edges shared by two rectangles, strictly inside the bounding box.
/// Vertical segments get the lower ids, each group sorted by axis and then
/// by starting coordinate.
pub fn seg(r: &Rectangulation) -> SegmentConfig {
    let w = r.width();
    let h = r.height();
    let owner = |x: i64, y: i64| -> usize {
        r.rects()
            .iter()
            .position(|rc| rc.x_lo <= x && x < rc.x_hi && rc.y_lo <= y && y < rc.y_hi)
            .unwrap()
    };

    let mut segments = Vec::new();
    let mut next_id = 0;
    for x in 1..w {
        let mut run_start: Option<i64> = None;
        for y in 0..=h {
            let boundary = y < h && owner(x - 1, y) != owner(x, y);
            match (boundary, run_start) {
                (true, None) => run_start = Some(y),
                (false, Some(lo)) => {
                    segments.push(Segment::vertical(next_id, x, lo, y));
                    next_id += 1;
                    run_start = None;
                }
                _ => {}
            }
        }
    }
    for y in 1..h {
        let mut run_start: Option<i64> = None;
        for x in 0..=w {
            let boundary = x < w && owner(x, y - 1) != owner(x, y);
            match (boundary, run_start) {
                (true, None) => run_start = Some(x),
                (false, Some(lo)) => {
                    segments.push(Segment::horizontal(next_id, y, lo, x));
                    next_id += 1;
                    run_start = None;
                }
                _ => {}
            }
        }
    }

    SegmentConfig::new(segments)
        .expect("maximal segments of a rectangulation form a valid configuration")
}

/// The interior segments together with the four sides of the bounding
/// rectangle. All coordinates are scaled by four and the sides stop one
/// unit short of the corners, so the frame neither crosses nor touches
/// anything and the whole collection is a valid configuration. Interior
/// segment ids are kept; the frame takes the next four ids in the order
/// bottom, top, left, right.
pub fn seg_with_frame(r: &Rectangulation) -> SegmentConfig {
    let inner = seg(r);
    let mut segs: Vec<Segment> = inner
        .segments()
        .iter()
        .map(|s| Segment {
            id: s.id,
            orientation: s.orientation,
            axis: 4 * s.axis,
            lo: 4 * s.lo,
            hi: 4 * s.hi,
        })
        .collect();
    let k = segs.len();
    let (w, h) = (4 * r.width(), 4 * r.height());
    segs.push(Segment::horizontal(k, 0, 1, w - 1));
    segs.push(Segment::horizontal(k + 1, h, 1, w - 1));
    segs.push(Segment::vertical(k + 2, 0, 1, h - 1));
    segs.push(Segment::vertical(k + 3, w, 1, h - 1));
    SegmentConfig::new(segs).expect("the scaled frame forms a valid configuration")
}
