//! Fixtures shared by the integration test targets: pavement enumeration,
//! a pattern battery, and a reference containment matcher that tries every
//! injection with no pruning.

#![allow(dead_code)]

use rectwalk_core::geometry::{GeomPattern, Segment, SegmentConfig};
use rectwalk_core::paving::{pave, Rectangulation};
use rectwalk_core::walk::{enumerate, WalkClass};

pub fn pavements(n: usize) -> Vec<Rectangulation> {
    enumerate(n, WalkClass::Lhqe)
        .map(|e| pave(&e).unwrap())
        .collect()
}

pub fn cfg(segments: Vec<Segment>) -> SegmentConfig {
    SegmentConfig::new(segments).unwrap()
}

pub fn top_t() -> GeomPattern {
    GeomPattern::new(cfg(vec![
        Segment::horizontal(0, 2, 0, 2),
        Segment::vertical(1, 1, 0, 2),
    ]))
}

/// A small battery of patterns: free segments, each of the four T shapes,
/// a host with two hanging verticals, and a disconnected pair.
pub fn battery() -> Vec<SegmentConfig> {
    vec![
        cfg(vec![]),
        cfg(vec![Segment::horizontal(0, 0, 0, 1)]),
        cfg(vec![Segment::vertical(0, 0, 0, 1)]),
        cfg(vec![
            Segment::horizontal(0, 2, 0, 2),
            Segment::vertical(1, 1, 0, 2),
        ]),
        cfg(vec![
            Segment::horizontal(0, 2, 0, 2),
            Segment::vertical(1, 1, 2, 4),
        ]),
        cfg(vec![
            Segment::vertical(0, 2, 0, 2),
            Segment::horizontal(1, 1, 0, 2),
        ]),
        cfg(vec![
            Segment::vertical(0, 2, 0, 2),
            Segment::horizontal(1, 1, 2, 4),
        ]),
        cfg(vec![
            Segment::horizontal(0, 2, 0, 5),
            Segment::vertical(1, 1, 0, 2),
            Segment::vertical(2, 3, 0, 2),
        ]),
        cfg(vec![
            Segment::horizontal(0, 0, 0, 1),
            Segment::vertical(1, 5, 3, 4),
        ]),
    ]
}

/// Reference matcher trying every injection with no pruning, checking the
/// definitional conditions directly on the incidence lists.
pub fn oracle_contains(host: &SegmentConfig, p: &SegmentConfig, induced: bool) -> bool {
    let mut map = Vec::new();
    let mut used = vec![false; host.len()];
    oracle_rec(host, p, induced, &mut map, &mut used)
}

fn oracle_rec(
    host: &SegmentConfig,
    p: &SegmentConfig,
    induced: bool,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if map.len() == p.len() {
        return oracle_ok(host, p, induced, map);
    }
    for cand in 0..host.len() {
        if used[cand] {
            continue;
        }
        map.push(cand);
        used[cand] = true;
        if oracle_rec(host, p, induced, map, used) {
            return true;
        }
        used[cand] = false;
        map.pop();
    }
    false
}

fn oracle_ok(host: &SegmentConfig, p: &SegmentConfig, induced: bool, map: &[usize]) -> bool {
    let h_seg = host.segments();
    let p_seg = p.segments();
    let p_index = |id: usize| p_seg.iter().position(|s| s.id == id).unwrap();
    for i in 0..p_seg.len() {
        if p_seg[i].orientation != h_seg[map[i]].orientation {
            return false;
        }
    }
    for inc in p.incidences() {
        let s_img = h_seg[map[p_index(inc.segment)]].id;
        let h_img = h_seg[map[p_index(inc.host)]].id;
        let present = host
            .incidences()
            .iter()
            .any(|j| j.segment == s_img && j.host == h_img && j.contact == inc.contact);
        if !present {
            return false;
        }
    }
    if induced {
        let image_ids: Vec<usize> = map.iter().map(|&m| h_seg[m].id).collect();
        let among_images = host
            .incidences()
            .iter()
            .filter(|j| image_ids.contains(&j.segment) && image_ids.contains(&j.host))
            .count();
        if among_images != p.incidences().len() {
            return false;
        }
    }
    for s in 0..p_seg.len() {
        let mut prev: Option<i64> = None;
        for e in p.neighbors(s) {
            let img_id = h_seg[map[p_index(e.neighbor)]].id;
            let pos = host
                .neighbors(map[s])
                .iter()
                .find(|f| f.neighbor == img_id && f.contact == e.contact)
                .map(|f| f.position);
            let pos = match pos {
                Some(v) => v,
                None => return false,
            };
            if let Some(q) = prev {
                if pos <= q {
                    return false;
                }
            }
            prev = Some(pos);
        }
    }
    true
}
