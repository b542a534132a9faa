//! Pattern containment in rectangulations.

use alloc::vec::Vec;

use super::{seg, GeomPattern, NeighborEntry, SegmentConfig};
use crate::paving::Rectangulation;

/// Whether the rectangulation contains the pattern: some injection of the
/// pattern's segments into the maximal interior segments preserves
/// orientation, every contact of the pattern with its type, and the
/// combined neighbor order along every pattern segment. Extra contacts
/// among the image segments are allowed.
pub fn contains_pattern(r: &Rectangulation, p: &GeomPattern) -> bool {
    config_contains(&seg(r), p.config(), false)
}

/// Containment where the image carries exactly the pattern's contacts:
/// image segments may touch segments outside the image freely, but not
/// each other beyond what the pattern prescribes.
pub fn contains_pattern_induced(r: &Rectangulation, p: &GeomPattern) -> bool {
    config_contains(&seg(r), p.config(), true)
}

/// The underlying injection search on plain configurations.
pub fn config_contains(host: &SegmentConfig, pattern: &SegmentConfig, induced: bool) -> bool {
    if pattern.len() > host.len() {
        return false;
    }
    let mut map: Vec<usize> = alloc::vec![usize::MAX; pattern.len()];
    let mut used: Vec<bool> = alloc::vec![false; host.len()];
    embed(host, pattern, induced, 0, &mut map, &mut used)
}

fn embed(
    host: &SegmentConfig,
    pattern: &SegmentConfig,
    induced: bool,
    next: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if next == pattern.len() {
        return check_embedding(host, pattern, induced, map);
    }
    let s = pattern.segments()[next];
    for cand in 0..host.len() {
        if used[cand] || host.segments()[cand].orientation != s.orientation {
            continue;
        }
        if !feasible(host, pattern, next, cand) {
            continue;
        }
        map[next] = cand;
        used[cand] = true;
        if embed(host, pattern, induced, next + 1, map, used) {
            return true;
        }
        used[cand] = false;
        map[next] = usize::MAX;
    }
    false
}

/// Cheap per-segment pruning before recursing: the image must host at
/// least as many contacts of every type and must have its own ends
/// attached with the same type wherever the pattern segment does. Induced
/// surpluses are caught later on the complete map.
fn feasible(host: &SegmentConfig, pattern: &SegmentConfig, s: usize, cand: usize) -> bool {
    let mut ours = [0usize; 4];
    for e in pattern.neighbors(s) {
        ours[e.contact as usize] += 1;
    }
    let mut theirs = [0usize; 4];
    for e in host.neighbors(cand) {
        theirs[e.contact as usize] += 1;
    }
    for k in 0..4 {
        if theirs[k] < ours[k] {
            return false;
        }
    }
    for end in [super::End::Lo, super::End::Hi] {
        if let Some(contact) = pattern.end_contact(s, end) {
            if host.end_contact(cand, end) != Some(contact) {
                return false;
            }
        }
    }
    true
}

fn check_embedding(
    host: &SegmentConfig,
    pattern: &SegmentConfig,
    induced: bool,
    map: &[usize],
) -> bool {
    let pat_index = |id: usize| pattern.segments().iter().position(|s| s.id == id).unwrap();
    let host_id = |index: usize| host.segments()[index].id;

    for s in 0..pattern.len() {
        let image = host.neighbors(map[s]);
        // positions of the images of s's pattern neighbors along the image
        // segment, in the pattern's combined order
        let mut last_position: Option<i64> = None;
        for e in pattern.neighbors(s) {
            let image_neighbor = host_id(map[pat_index(e.neighbor)]);
            let found: Option<&NeighborEntry> = image
                .iter()
                .find(|f| f.neighbor == image_neighbor && f.contact == e.contact);
            let f = match found {
                Some(f) => f,
                None => return false,
            };
            if let Some(prev) = last_position {
                if f.position <= prev {
                    return false;
                }
            }
            last_position = Some(f.position);
        }
        if induced {
            // no contact among image segments beyond the pattern's
            let in_image = |id: usize| map.iter().any(|&m| host_id(m) == id);
            let extra = image
                .iter()
                .filter(|f| in_image(f.neighbor))
                .count();
            if extra != pattern.neighbors(s).len() {
                return false;
            }
        }
    }
    true
}
